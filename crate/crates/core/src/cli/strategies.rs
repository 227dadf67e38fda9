//! Strategy label registry for `--strategies`.
//!
//! `H`/`C` identity, `D` bit flip (`X` under Marinatto-Weber, `U(π,0)` under
//! Eisert), `Q` = iZ, `R` = half/half mixture of identity and the scheme's
//! `D`, and `u(theta,phi)` literals in radians.

use crate::error::{Error, Result};
use crate::qscheme::{Scheme, StrategyOperator};

pub fn dove(scheme: Scheme) -> StrategyOperator {
    match scheme {
        Scheme::MarinattoWeber => StrategyOperator::pauli_x(),
        Scheme::Eisert => StrategyOperator::eisert_dove(),
    }
}

pub fn random_half(scheme: Scheme) -> StrategyOperator {
    StrategyOperator::binary_mixture(0.5, StrategyOperator::identity(), dove(scheme)).expect("valid half mixture")
}

pub fn resolve(label: &str, scheme: Scheme) -> Result<StrategyOperator> {
    match label {
        "H" | "C" => Ok(StrategyOperator::identity()),
        "D" => Ok(dove(scheme)),
        "Q" => Ok(StrategyOperator::q()),
        "R" => Ok(random_half(scheme)),
        other => parse_u_literal(other),
    }
}

fn parse_u_literal(label: &str) -> Result<StrategyOperator> {
    let unknown = || Error::UnknownStrategy(label.to_string());
    let inner = label
        .strip_prefix("u(")
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(unknown)?;
    let (theta, phi) = inner.split_once(',').ok_or_else(unknown)?;
    let theta: f64 = theta.trim().parse().map_err(|_| unknown())?;
    let phi: f64 = phi.trim().parse().map_err(|_| unknown())?;
    StrategyOperator::parametrized(theta, phi)
}

/// Splits a comma list, keeping commas inside parentheses.
pub fn split_list(list: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut current = String::new();
    for ch in list.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                out.push(current.trim().to_string());
                current.clear();
                continue;
            }
            _ => {}
        }
        current.push(ch);
    }
    out.push(current.trim().to_string());
    out.retain(|s| !s.is_empty());
    out
}

pub fn resolve_list(list: &str, scheme: Scheme) -> Result<Vec<(String, StrategyOperator)>> {
    split_list(list)
        .into_iter()
        .map(|label| resolve(&label, scheme).map(|op| (label, op)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn splits_around_parenthesised_literals() {
        assert_eq!(split_list("C,D,Q"), vec!["C", "D", "Q"]);
        assert_eq!(split_list("H, u(1.5,0.25) ,R"), vec!["H", "u(1.5,0.25)", "R"]);
        assert!(split_list("").is_empty());
    }

    #[test]
    fn resolves_labels_per_scheme() {
        assert_eq!(
            resolve("D", Scheme::MarinattoWeber).unwrap(),
            StrategyOperator::pauli_x()
        );
        assert_eq!(resolve("D", Scheme::Eisert).unwrap(), StrategyOperator::eisert_dove());
        assert_eq!(resolve("C", Scheme::Eisert).unwrap(), StrategyOperator::identity());
        assert_eq!(
            resolve("u(3.141592653589793, 0)", Scheme::Eisert).unwrap(),
            StrategyOperator::parametrized(PI, 0.0).unwrap()
        );
        assert!(!resolve("R", Scheme::Eisert).unwrap().is_pure());
    }

    #[test]
    fn rejects_unknown_and_out_of_domain() {
        assert!(matches!(resolve("Z", Scheme::Eisert), Err(Error::UnknownStrategy(_))));
        assert!(matches!(
            resolve("u(1)", Scheme::Eisert),
            Err(Error::UnknownStrategy(_))
        ));
        assert!(matches!(
            resolve("u(a,b)", Scheme::Eisert),
            Err(Error::UnknownStrategy(_))
        ));
        assert!(matches!(
            resolve("u(4,0)", Scheme::Eisert),
            Err(Error::OutOfDomain { .. })
        ));
    }
}
