//! The inverse-semigroup interface shared by finite tables and the closed-form
//! built-ins.

use std::fmt::Debug;
use std::hash::Hash;

/// An inverse semigroup given by its multiplication and inversion.
///
/// The Green's relations and their quasi-orders are derived from the
/// natural partial order on idempotents: `a R b` iff `aa⁻¹ = bb⁻¹`,
/// `a ≤_R b` iff `aa⁻¹ ≤ bb⁻¹`, and dually for `L`.
pub trait InverseSemigroup {
    type Elem: Clone + Eq + Hash + Ord + Debug;

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;

    fn is_idempotent(&self, a: &Self::Elem) -> bool {
        &self.mul(a, a) == a
    }

    /// `aa⁻¹`
    fn left_unit(&self, a: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(a))
    }

    /// `a⁻¹a`
    fn right_unit(&self, a: &Self::Elem) -> Self::Elem {
        self.mul(&self.inv(a), a)
    }

    /// `a⁻¹b`
    fn quotient(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(&self.inv(a), b)
    }

    /// Natural order on idempotents: `e ≤ f` iff `e = ef`.
    fn idempotent_leq(&self, e: &Self::Elem, f: &Self::Elem) -> bool {
        &self.mul(e, f) == e
    }

    fn r_related(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.left_unit(a) == self.left_unit(b)
    }

    fn l_related(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.right_unit(a) == self.right_unit(b)
    }

    /// `aQ¹ ⊆ bQ¹`
    fn leq_r(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.idempotent_leq(&self.left_unit(a), &self.left_unit(b))
    }

    /// `Q¹a ⊆ Q¹b`
    fn leq_l(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.idempotent_leq(&self.right_unit(a), &self.right_unit(b))
    }
}
