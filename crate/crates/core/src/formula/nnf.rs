//! Negation normal form: duals pushed onto atoms, implication expanded.

use super::Formula;

impl Formula {
    /// Rewrites to negation normal form. The result contains `Dual` only
    /// directly on atoms and no `Lollipop`; `A -o B` becomes `A^ | B`.
    ///
    /// Evaluated strength is preserved for every environment; evaluated
    /// counts are not in general, because the dual of an additive
    /// connective swaps min and max at the count level.
    pub fn nnf(&self) -> Formula {
        positive(self)
    }

    /// True when duals appear on atoms only and no `Lollipop` remains.
    pub fn is_nnf(&self) -> bool {
        match self {
            Formula::Atom(_) | Formula::Top | Formula::Zero | Formula::One | Formula::Bottom => {
                true
            }
            Formula::Dual(x) => matches!(**x, Formula::Atom(_)),
            Formula::Bang(x) | Formula::Quest(x) => x.is_nnf(),
            Formula::Tensor(l, r)
            | Formula::Par(l, r)
            | Formula::With(l, r)
            | Formula::Plus(l, r) => l.is_nnf() && r.is_nnf(),
            Formula::Lollipop(_, _) => false,
        }
    }
}

fn positive(f: &Formula) -> Formula {
    match f {
        Formula::Atom(_) | Formula::Top | Formula::Zero | Formula::One | Formula::Bottom => {
            f.clone()
        }
        Formula::Dual(x) => negative(x),
        Formula::Tensor(l, r) => positive(l).tensor(positive(r)),
        Formula::Par(l, r) => positive(l).par(positive(r)),
        Formula::With(l, r) => positive(l).with(positive(r)),
        Formula::Plus(l, r) => positive(l).plus(positive(r)),
        Formula::Lollipop(l, r) => negative(l).par(positive(r)),
        Formula::Bang(x) => positive(x).bang(),
        Formula::Quest(x) => positive(x).quest(),
    }
}

/// Normal form of the dual of `f`.
fn negative(f: &Formula) -> Formula {
    match f {
        Formula::Atom(_) => f.clone().dual(),
        Formula::Dual(x) => positive(x),
        Formula::Tensor(l, r) => negative(l).par(negative(r)),
        Formula::Par(l, r) => negative(l).tensor(negative(r)),
        Formula::With(l, r) => negative(l).plus(negative(r)),
        Formula::Plus(l, r) => negative(l).with(negative(r)),
        Formula::Lollipop(l, r) => positive(l).tensor(negative(r)),
        Formula::Bang(x) => negative(x).quest(),
        Formula::Quest(x) => negative(x).bang(),
        Formula::Top => Formula::Zero,
        Formula::Zero => Formula::Top,
        Formula::One => Formula::Bottom,
        Formula::Bottom => Formula::One,
    }
}
