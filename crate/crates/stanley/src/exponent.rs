use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Exponent vector of a monomial, with arbitrary-precision coordinates.
///
/// The derived `Ord` is lexicographic on the coordinate vector, which is the
/// canonical order used everywhere (sorted generator lists, JSON emission).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exponent {
    coords: Vec<BigUint>,
}

impl Exponent {
    pub fn new(coords: Vec<BigUint>) -> Self {
        Exponent { coords }
    }

    pub fn from_u64s(coords: &[u64]) -> Self {
        Exponent {
            coords: coords.iter().map(|&c| BigUint::from(c)).collect(),
        }
    }

    /// The unit monomial 1 in `n` variables.
    pub fn zeros(n: usize) -> Self {
        Exponent {
            coords: vec![BigUint::zero(); n],
        }
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coord(&self, var: usize) -> &BigUint {
        &self.coords[var]
    }

    pub fn coords(&self) -> &[BigUint] {
        &self.coords
    }

    /// True for the unit monomial (all coordinates zero).
    pub fn is_one(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn total_degree(&self) -> BigUint {
        self.coords.iter().sum()
    }

    /// Componentwise ≤, i.e. x^self divides x^other.
    pub fn divides(&self, other: &Exponent) -> bool {
        debug_assert_eq!(self.len(), other.len());
        self.coords.iter().zip(&other.coords).all(|(a, b)| a <= b)
    }

    /// Componentwise max, the exponent of lcm(x^self, x^other).
    pub fn join(&self, other: &Exponent) -> Exponent {
        debug_assert_eq!(self.len(), other.len());
        Exponent {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.max(b).clone())
                .collect(),
        }
    }

    /// Variables with nonzero exponent, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&j| !self.coords[j].is_zero()).collect()
    }

    pub fn in_support(&self, var: usize) -> bool {
        !self.coords[var].is_zero()
    }

    /// All coordinates ≤ 1.
    pub fn is_squarefree(&self) -> bool {
        self.coords.iter().all(|c| *c <= BigUint::one())
    }

    /// Multiply by the variable `var` (exponent + 1 there).
    pub fn mul_var(&self, var: usize) -> Exponent {
        let mut coords = self.coords.clone();
        coords[var] += 1u32;
        Exponent { coords }
    }

    /// Divide by the variable `var`; `None` when it does not divide.
    pub fn div_var(&self, var: usize) -> Option<Exponent> {
        if self.coords[var].is_zero() {
            return None;
        }
        let mut coords = self.coords.clone();
        coords[var] -= 1u32;
        Some(Exponent { coords })
    }

    /// Copy with coordinate `var` replaced.
    pub fn with_coord(&self, var: usize, value: BigUint) -> Exponent {
        let mut coords = self.coords.clone();
        coords[var] = value;
        Exponent { coords }
    }
}

impl FromIterator<BigUint> for Exponent {
    fn from_iter<T: IntoIterator<Item = BigUint>>(iter: T) -> Self {
        Exponent {
            coords: iter.into_iter().collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divides_is_componentwise() {
        let a = Exponent::from_u64s(&[1, 0, 2]);
        let b = Exponent::from_u64s(&[1, 1, 2]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert!(a.divides(&a));
    }

    #[test]
    fn join_is_lcm_exponent() {
        let a = Exponent::from_u64s(&[1, 0, 2]);
        let b = Exponent::from_u64s(&[0, 3, 1]);
        assert_eq!(a.join(&b), Exponent::from_u64s(&[1, 3, 2]));
    }

    #[test]
    fn ord_is_lexicographic() {
        let a = Exponent::from_u64s(&[0, 5]);
        let b = Exponent::from_u64s(&[1, 0]);
        assert!(a < b);
    }

    #[test]
    fn var_multiplication_and_division() {
        let a = Exponent::from_u64s(&[1, 0]);
        assert_eq!(a.mul_var(1), Exponent::from_u64s(&[1, 1]));
        assert_eq!(a.div_var(0), Some(Exponent::from_u64s(&[0, 0])));
        assert_eq!(a.div_var(1), None);
    }

    #[test]
    fn support_and_squarefree() {
        let a = Exponent::from_u64s(&[2, 0, 1]);
        assert_eq!(a.support(), vec![0, 2]);
        assert!(!a.is_squarefree());
        assert!(Exponent::from_u64s(&[1, 0, 1]).is_squarefree());
    }
}
