use crate::error::Error;
use crate::exponent::Exponent;
use num_traits::One;
use std::fmt;

/// The ambient polynomial ring S = K[x_1, ..., x_n] over the fixed field ℚ,
/// together with a total order on its variables.
///
/// The order matters: weak polymatroidality is checked against it, and the
/// decomposition recursion always splits at the order-first variable in the
/// generator support. `order[p]` is the (0-based) variable sitting at order
/// position `p`; the default is the identity, i.e. x_1 < x_2 < ... < x_n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing {
    n: usize,
    names: Vec<String>,
    order: Vec<usize>,
}

impl PolyRing {
    /// Ring with `n` variables named x1..xn in identity order.
    pub fn new(n: usize) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::InvalidRing("n must be at least 1".into()));
        }
        let names = (1..=n).map(|i| format!("x{i}")).collect();
        Ok(PolyRing {
            n,
            names,
            order: (0..n).collect(),
        })
    }

    /// Ring with custom variable names (identity order). Names must be
    /// nonempty and pairwise distinct.
    pub fn with_names(names: Vec<String>) -> Result<Self, Error> {
        if names.is_empty() {
            return Err(Error::InvalidRing("n must be at least 1".into()));
        }
        for (i, a) in names.iter().enumerate() {
            if a.is_empty() {
                return Err(Error::InvalidRing("variable names must be nonempty".into()));
            }
            if names[..i].contains(a) {
                return Err(Error::InvalidRing(format!("duplicate variable name `{a}`")));
            }
        }
        let n = names.len();
        Ok(PolyRing {
            n,
            names,
            order: (0..n).collect(),
        })
    }

    /// Replace the variable order. `order[p]` is the 0-based variable index
    /// at order position `p`; it must be a permutation of 0..n.
    pub fn with_order(mut self, order: Vec<usize>) -> Result<Self, Error> {
        if order.len() != self.n {
            return Err(Error::InvalidRing(format!(
                "order lists {} positions for {} variables",
                order.len(),
                self.n
            )));
        }
        let mut seen = vec![false; self.n];
        for &j in &order {
            if j >= self.n {
                return Err(Error::VariableOutOfRange { var: j + 1, n: self.n });
            }
            if seen[j] {
                return Err(Error::InvalidRing(format!(
                    "variable {} repeated in order",
                    j + 1
                )));
            }
            seen[j] = true;
        }
        self.order = order;
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, var: usize) -> &str {
        &self.names[var]
    }

    /// Variable order as positions: `order()[p]` is the variable at position `p`.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// The order-first variable, i.e. `order()[0]`.
    pub fn first_variable(&self) -> usize {
        self.order[0]
    }

    /// Position of variable `var` in the order (inverse permutation).
    pub fn position_of(&self, var: usize) -> usize {
        self.order
            .iter()
            .position(|&j| j == var)
            .expect("var out of range")
    }

    /// True when `order` is the identity permutation.
    pub fn has_identity_order(&self) -> bool {
        self.order.iter().enumerate().all(|(p, &j)| p == j)
    }

    /// Validate a 0-based variable index against this ring.
    pub fn check_var(&self, var: usize) -> Result<(), Error> {
        if var < self.n {
            Ok(())
        } else {
            Err(Error::VariableOutOfRange { var: var + 1, n: self.n })
        }
    }

    /// Render a monomial like `x1^2*x3`; the unit monomial renders as `1`.
    pub fn format_monomial(&self, e: &Exponent) -> String {
        assert_eq!(e.len(), self.n, "exponent length must match ring");
        let mut parts = Vec::new();
        for j in 0..self.n {
            let c = e.coord(j);
            if c.is_one() {
                parts.push(self.names[j].clone());
            } else if !num_traits::Zero::is_zero(c) {
                parts.push(format!("{}^{}", self.names[j], c));
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{}]", self.names.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_zero_variables() {
        assert!(PolyRing::new(0).is_err());
    }

    #[test]
    fn default_names_and_order() {
        let r = PolyRing::new(3).unwrap();
        assert_eq!(r.names(), &["x1", "x2", "x3"]);
        assert_eq!(r.order(), &[0, 1, 2]);
        assert_eq!(r.first_variable(), 0);
        assert!(r.has_identity_order());
    }

    #[test]
    fn order_is_a_permutation() {
        let r = PolyRing::new(3).unwrap();
        assert!(r.clone().with_order(vec![1, 0, 2]).is_ok());
        assert!(r.clone().with_order(vec![0, 0, 2]).is_err());
        assert!(r.clone().with_order(vec![0, 1]).is_err());
        assert!(r.with_order(vec![0, 1, 3]).is_err());
    }

    #[test]
    fn position_inverts_order() {
        let r = PolyRing::new(3).unwrap().with_order(vec![2, 0, 1]).unwrap();
        assert_eq!(r.first_variable(), 2);
        assert_eq!(r.position_of(2), 0);
        assert_eq!(r.position_of(0), 1);
        assert_eq!(r.position_of(1), 2);
    }

    #[test]
    fn duplicate_names_rejected() {
        assert!(PolyRing::with_names(vec!["a".into(), "a".into()]).is_err());
    }

    #[test]
    fn formats_monomials() {
        let r = PolyRing::new(3).unwrap();
        let e = Exponent::from_u64s(&[2, 0, 1]);
        assert_eq!(r.format_monomial(&e), "x1^2*x3");
        assert_eq!(r.format_monomial(&Exponent::zeros(3)), "1");
    }
}
