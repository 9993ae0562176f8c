//! Exact arithmetic in the localized supercommutative ring `K[x_ij]_{D1 D2}`.

mod elem;
mod monomial;
mod parse;
mod poly;
mod ring;

pub use elem::SuperElem;
pub use monomial::{mono_mul, odd_merge_negates, Block, SuperMonomial, VarId, MAX_EVEN_VARS, MAX_ODD_VARS};
pub use parse::parse_expr;
pub use poly::Poly;
pub use ring::{minor_poly, permutations_with_sign, RingSpec, SuperRing};

pub(crate) use monomial::mono_mul_unchecked;
pub(crate) use ring::RawElem;

/// Free-standing product, matching the operator form.
pub fn elem_mul(f: &SuperElem, g: &SuperElem) -> crate::Result<SuperElem> {
    f.try_mul(g)
}

/// Free-standing sum, matching the operator form.
pub fn elem_add(f: &SuperElem, g: &SuperElem) -> crate::Result<SuperElem> {
    f.try_add(g)
}

impl SuperRing {
    /// Sum of many elements, normalized once over their common denominator.
    pub fn sum<'a>(&self, items: impl IntoIterator<Item = &'a SuperElem>) -> SuperElem {
        let items: Vec<&SuperElem> = items.into_iter().filter(|e| !e.is_zero()).collect();
        let a = items.iter().map(|e| e.denominator().0).max().unwrap_or(0);
        let b = items.iter().map(|e| e.denominator().1).max().unwrap_or(0);
        let mut num = self.zero_poly();
        for e in items {
            assert_eq!(e.ring(), self, "operands from the same ring");
            num.add_assign(&e.lifted_numerator(a, b));
        }
        self.elem(num, a, b)
    }
}
