//! The two identities satisfied by `n x n` upper triangular Boolean matrices,
//! and the extensive maps showing that larger Catalan monoids and semirings
//! violate them.
//!
//! * `x^n = x^(n+1)` holds in `T_n`; the map `i -> i+1` (capped at `n+2`)
//!   breaks it in `C_{n+2}`.
//! * `x^(n-1) y^(n-1) = x^n y^(n-1) + x^(n-1) y^n` holds in `T_n`; the maps
//!   `beta: i -> i+1` and `gamma: i -> n` (both fixing `n+1`) break it in
//!   `C_{n+1}`.
//!
//! Identities pass to substructures and homomorphic images, so a violation
//! rules out any embedding (or division) into `T_n`.

use serde::Serialize;

use super::term::{Identity, Term};
use crate::chain_maps::Transformation;
use crate::error::{Error, Result};

fn xy_power(x_exp: u32, y_exp: u32) -> Result<Term> {
    Ok(Term::product([
        Term::pow(Term::var('x'), x_exp)?,
        Term::pow(Term::var('y'), y_exp)?,
    ]))
}

/// `x^n = x^(n+1)`, for `n >= 1`.
pub fn power_identity(n: u32) -> Result<Identity> {
    if n == 0 {
        return Err(Error::InvalidIdentity("x^n = x^(n+1) needs n >= 1".into()));
    }
    Ok(Identity::new(
        Term::pow(Term::var('x'), n)?,
        Term::pow(Term::var('x'), n + 1)?,
    ))
}

/// `x^(n-1) y^(n-1) = x^n y^(n-1) + x^(n-1) y^n`, for `n >= 2`.
pub fn absorption_identity(n: u32) -> Result<Identity> {
    if n < 2 {
        return Err(Error::InvalidIdentity(
            "x^(n-1) y^(n-1) = x^n y^(n-1) + x^(n-1) y^n needs n >= 2".into(),
        ));
    }
    Ok(Identity::new(
        xy_power(n - 1, n - 1)?,
        Term::sum([xy_power(n, n - 1)?, xy_power(n - 1, n)?]),
    ))
}

/// Both identities for `T_n`; requires `n >= 2`.
pub fn triangular_identities(n: u32) -> Result<(Identity, Identity)> {
    let second = absorption_identity(n)?;
    Ok((power_identity(n)?, second))
}

/// Counterexamples to the identities of `T_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OptimalityWitnesses {
    /// In `C_{n+2}`: violates `x^n = x^(n+1)`.
    pub alpha: Transformation,
    /// In `C_{n+1}`, with `gamma`: violates the two-variable identity.
    pub beta: Transformation,
    pub gamma: Transformation,
}

pub fn optimality_witnesses(n: u32) -> Result<OptimalityWitnesses> {
    if n == 0 {
        return Err(Error::InvalidDimension {
            n: 0,
            reason: "witnesses are defined for n >= 1",
        });
    }
    let alpha = (1..=n + 2).map(|i| if i <= n + 1 { i + 1 } else { n + 2 }).collect();
    let beta = (1..=n + 1).map(|i| if i <= n { i + 1 } else { n + 1 }).collect();
    let gamma = (1..=n + 1).map(|i| if i <= n { n } else { n + 1 }).collect();
    Ok(OptimalityWitnesses {
        alpha: Transformation::new(alpha)?,
        beta: Transformation::new(beta)?,
        gamma: Transformation::new(gamma)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identities_print_as_expected() {
        let (one, two) = triangular_identities(3).unwrap();
        assert_eq!(one.to_string(), "x^3 = x^4");
        assert_eq!(two.to_string(), "x^2 y^2 = x^3 y^2 + x^2 y^3");
        let (one, two) = triangular_identities(2).unwrap();
        assert_eq!(one.to_string(), "x^2 = x^3");
        assert_eq!(two.to_string(), "x y = x^2 y + x y^2");
        assert!(one.multiplicative_only && !two.multiplicative_only);
        assert!(absorption_identity(1).is_err());
        assert!(triangular_identities(1).is_err());
        assert_eq!(power_identity(1).unwrap().to_string(), "x = x^2");
        assert!(power_identity(0).is_err());
    }

    #[test]
    fn witness_values() {
        let w = optimality_witnesses(2).unwrap();
        assert_eq!(w.alpha.to_string(), "2344");
        assert_eq!(w.beta.to_string(), "233");
        assert_eq!(w.gamma.to_string(), "223");
        let w = optimality_witnesses(1).unwrap();
        assert_eq!(w.alpha.to_string(), "233");
        assert_eq!(w.beta.to_string(), "22");
        assert_eq!(w.gamma.to_string(), "12");
        for n in 1..6 {
            let w = optimality_witnesses(n).unwrap();
            assert!(w.alpha.is_extensive() && w.alpha.is_order_preserving());
            assert!(w.beta.is_extensive() && w.beta.is_order_preserving());
            assert!(w.gamma.is_extensive() && w.gamma.is_order_preserving());
        }
    }
}
