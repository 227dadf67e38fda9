//! Quantized two-player games.
//!
//! Two schemes are supported:
//!
//! * Marinatto-Weber: players apply (possibly mixed) local unitaries to a
//!   shared entangled state; the final density is the probability-weighted
//!   sum of the conjugated inputs.
//! * Eisert: the fixed entangler `J = (I⊗I + i·D⊗D)/√2` with `D = U(π, 0)`
//!   acts on |00>, players apply their unitaries, then `J†` disentangles.
//!   `J|00> = (|00> + i|11>)/√2`.
//!
//! Payoffs are expectations of diagonal payoff operators built from a 2x2
//! bimatrix.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, PI};

use crate::error::{Error, Result};
use crate::gamedef::{Payoff, StrategicGame};
use crate::qmat::{Complex, ComplexMatrix, StateVector, I, PAYOFF_TOL};

/// Unitarity tolerance for user-supplied strategy matrices.
pub const STRATEGY_UNITARY_TOL: f64 = 1e-9;
const MIXTURE_TOL: f64 = 1e-9;
const IMAG_RESIDUE_TOL: f64 = 1e-9;

/// The two-parameter strategy unitary
/// `[[e^{iφ}cos(θ/2), sin(θ/2)], [−sin(θ/2), e^{−iφ}cos(θ/2)]]`
/// with `θ ∈ [0, π]`, `φ ∈ [0, π/2]`.
pub fn u_theta_phi(theta: f64, phi: f64) -> Result<ComplexMatrix> {
    check_angles(theta, phi)?;
    let (s, c) = (theta / 2.0).sin_cos();
    let phase = Complex::from_polar(1.0, phi);
    Ok(ComplexMatrix::from_rows([
        [phase * c, Complex::new(s, 0.0)],
        [Complex::new(-s, 0.0), phase.conj() * c],
    ]))
}

fn check_angles(theta: f64, phi: f64) -> Result<()> {
    if !(0.0..=PI).contains(&theta) {
        return Err(Error::OutOfDomain {
            name: "theta",
            value: theta,
            min: 0.0,
            max: PI,
        });
    }
    if !(0.0..=FRAC_PI_2).contains(&phi) {
        return Err(Error::OutOfDomain {
            name: "phi",
            value: phi,
            min: 0.0,
            max: FRAC_PI_2,
        });
    }
    Ok(())
}

/// `U(π, 0) = [[0, 1], [−1, 0]]`, the Eisert-scheme "defect/dove" move.
pub fn eisert_dove() -> ComplexMatrix {
    u_theta_phi(PI, 0.0).expect("in domain")
}

/// `U(0, π/2) = iZ`.
pub fn q_operator() -> ComplexMatrix {
    u_theta_phi(0.0, FRAC_PI_2).expect("in domain")
}

/// `(I⊗I + i·D⊗D)/√2` with `D = U(π, 0)`.
pub fn entangler() -> ComplexMatrix {
    let d = eisert_dove();
    ComplexMatrix::identity(4)
        .add(&d.kron(&d).scale(I))
        .expect("4x4 shapes")
        .scale(Complex::new(FRAC_1_SQRT_2, 0.0))
}

/// A player's move.
#[derive(Debug, Clone, PartialEq)]
pub enum StrategyOperator {
    Parametrized {
        theta: f64,
        phi: f64,
    },
    RawUnitary(ComplexMatrix),
    /// Probability-weighted pure components; never nested.
    Mixture(Vec<(f64, StrategyOperator)>),
}

impl StrategyOperator {
    pub fn parametrized(theta: f64, phi: f64) -> Result<Self> {
        check_angles(theta, phi)?;
        Ok(Self::Parametrized { theta, phi })
    }

    pub fn raw(m: ComplexMatrix) -> Result<Self> {
        if m.shape() != (2, 2) {
            return Err(Error::DimensionMismatch {
                op: "strategy",
                left_rows: m.rows(),
                left_cols: m.cols(),
                right_rows: 2,
                right_cols: 2,
            });
        }
        if !m.is_unitary(STRATEGY_UNITARY_TOL)? {
            return Err(Error::NotUnitary {
                tol: STRATEGY_UNITARY_TOL,
            });
        }
        Ok(Self::RawUnitary(m))
    }

    pub fn mixture(components: Vec<(f64, StrategyOperator)>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidMixture("no components".into()));
        }
        let mut total = 0.0;
        for (w, op) in &components {
            if !w.is_finite() || *w < 0.0 {
                return Err(Error::InvalidMixture(format!("weight {w} is negative")));
            }
            if matches!(op, Self::Mixture(_)) {
                return Err(Error::InvalidMixture("nested mixture".into()));
            }
            total += w;
        }
        if (total - 1.0).abs() > MIXTURE_TOL {
            return Err(Error::InvalidMixture(format!("weights sum to {total}")));
        }
        Ok(Self::Mixture(components))
    }

    /// Mixture `p·a + (1−p)·b` of two pure moves.
    pub fn binary_mixture(p: f64, a: StrategyOperator, b: StrategyOperator) -> Result<Self> {
        crate::gamedef::check_probability("p", p)?;
        Self::mixture(vec![(p, a), (1.0 - p, b)])
    }

    pub fn identity() -> Self {
        Self::Parametrized { theta: 0.0, phi: 0.0 }
    }

    pub fn pauli_x() -> Self {
        Self::RawUnitary(ComplexMatrix::pauli_x())
    }

    pub fn eisert_dove() -> Self {
        Self::Parametrized { theta: PI, phi: 0.0 }
    }

    pub fn q() -> Self {
        Self::Parametrized {
            theta: 0.0,
            phi: FRAC_PI_2,
        }
    }

    pub fn is_pure(&self) -> bool {
        !matches!(self, Self::Mixture(_))
    }

    /// Flattens into `(probability, unitary)` pairs; pure moves yield one pair.
    pub fn pure_components(&self) -> Result<Vec<(f64, ComplexMatrix)>> {
        match self {
            Self::Parametrized { theta, phi } => Ok(vec![(1.0, u_theta_phi(*theta, *phi)?)]),
            Self::RawUnitary(m) => Ok(vec![(1.0, m.clone())]),
            Self::Mixture(parts) => parts
                .iter()
                .map(|(w, op)| match op {
                    Self::Mixture(_) => Err(Error::InvalidMixture("nested mixture".into())),
                    pure => Ok((*w, pure.pure_components()?.remove(0).1)),
                })
                .collect(),
        }
    }

    /// The single unitary of a pure move.
    pub fn unitary(&self) -> Result<ComplexMatrix> {
        match self {
            Self::Mixture(_) => Err(Error::InvalidMixture("a mixed strategy has no single unitary".into())),
            pure => Ok(pure.pure_components()?.remove(0).1),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum InitialState {
    /// (|00> + i|11>)/√2
    MwIPhase,
    /// (|00> + |11>)/√2
    BellPlus,
    Custom(StateVector),
}

impl InitialState {
    pub fn custom(state: StateVector) -> Result<Self> {
        if state.dim() != 4 {
            return Err(Error::InvalidEntries {
                expected: 4,
                got: state.dim(),
            });
        }
        Ok(Self::Custom(state))
    }

    pub fn state(&self) -> StateVector {
        match self {
            Self::MwIPhase => StateVector::bell_i_phase(),
            Self::BellPlus => StateVector::bell_plus(),
            Self::Custom(s) => s.clone(),
        }
    }

    pub fn density(&self) -> ComplexMatrix {
        self.state().outer()
    }
}

/// Diagonal payoff observables for Alice and Bob.
#[derive(Debug, Clone, PartialEq)]
pub struct PayoffOperators {
    p_a: ComplexMatrix,
    p_b: ComplexMatrix,
}

impl PayoffOperators {
    pub fn p_a(&self) -> &ComplexMatrix {
        &self.p_a
    }

    pub fn p_b(&self) -> &ComplexMatrix {
        &self.p_b
    }

    pub fn diag_a(&self) -> Vec<f64> {
        self.p_a.diagonal().iter().map(|z| z.re).collect()
    }

    pub fn diag_b(&self) -> Vec<f64> {
        self.p_b.diagonal().iter().map(|z| z.re).collect()
    }
}

/// Builds `P_A = Σ a_ij |ij><ij|` and `P_B = Σ b_ij |ij><ij|` from a 2x2 game.
pub fn payoff_operators(game: &StrategicGame) -> Result<PayoffOperators> {
    game.ensure_2x2()?;
    let cells = [game.cell(0, 0), game.cell(0, 1), game.cell(1, 0), game.cell(1, 1)];
    let a: Vec<f64> = cells.iter().map(|c| c.0).collect();
    let b: Vec<f64> = cells.iter().map(|c| c.1).collect();
    Ok(PayoffOperators {
        p_a: ComplexMatrix::from_real_diagonal(&a)?,
        p_b: ComplexMatrix::from_real_diagonal(&b)?,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scheme {
    MarinattoWeber,
    Eisert,
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuantumGameSpec {
    pub scheme: Scheme,
    /// Ignored by the Eisert scheme, which always starts from `J|00>`.
    pub initial: InitialState,
    pub payoffs: PayoffOperators,
}

impl QuantumGameSpec {
    pub fn new(scheme: Scheme, initial: InitialState, payoffs: PayoffOperators) -> Self {
        Self {
            scheme,
            initial,
            payoffs,
        }
    }

    pub fn final_density(&self, s_a: &StrategyOperator, s_b: &StrategyOperator) -> Result<ComplexMatrix> {
        match self.scheme {
            Scheme::MarinattoWeber => mw_final_density(&self.initial, s_a, s_b),
            Scheme::Eisert => eisert_final_density(s_a, s_b),
        }
    }

    pub fn payoff(&self, s_a: &StrategyOperator, s_b: &StrategyOperator) -> Result<Payoff> {
        expected_payoffs(&self.final_density(s_a, s_b)?, &self.payoffs)
    }
}

/// `Σ w_a w_b (u_a⊗u_b) ρ_in (u_a⊗u_b)†` over all pure component pairs.
pub fn mw_final_density(
    initial: &InitialState,
    s_a: &StrategyOperator,
    s_b: &StrategyOperator,
) -> Result<ComplexMatrix> {
    let rho_in = initial.density();
    mix_over_components(s_a, s_b, |u_a, u_b| {
        let k = u_a.kron(u_b);
        k.matmul(&rho_in)?.matmul(&k.adjoint())
    })
}

/// `J†(u_a⊗u_b)J|00>`.
pub fn eisert_final_state(u_a: &ComplexMatrix, u_b: &ComplexMatrix) -> Result<StateVector> {
    for u in [u_a, u_b] {
        if u.shape() != (2, 2) || !u.is_unitary(STRATEGY_UNITARY_TOL)? {
            return Err(Error::NotUnitary {
                tol: STRATEGY_UNITARY_TOL,
            });
        }
    }
    let j = entangler();
    let circuit = j.adjoint().matmul(&u_a.kron(u_b))?.matmul(&j)?;
    StateVector::basis(4, 0)?.evolve(&circuit)
}

/// Eisert final density; mixed moves average over their pure components.
pub fn eisert_final_density(s_a: &StrategyOperator, s_b: &StrategyOperator) -> Result<ComplexMatrix> {
    mix_over_components(s_a, s_b, |u_a, u_b| Ok(eisert_final_state(u_a, u_b)?.outer()))
}

fn mix_over_components<F>(s_a: &StrategyOperator, s_b: &StrategyOperator, mut pure: F) -> Result<ComplexMatrix>
where
    F: FnMut(&ComplexMatrix, &ComplexMatrix) -> Result<ComplexMatrix>,
{
    let comps_a = s_a.pure_components()?;
    let comps_b = s_b.pure_components()?;
    let mut rho = ComplexMatrix::zeros(4, 4);
    for (w_a, u_a) in &comps_a {
        for (w_b, u_b) in &comps_b {
            let w = w_a * w_b;
            if w == 0.0 {
                continue;
            }
            rho = rho.add(&pure(u_a, u_b)?.scale(Complex::new(w, 0.0)))?;
        }
    }
    Ok(rho)
}

/// `(Re Tr(P_A ρ), Re Tr(P_B ρ))`; errors if either trace has an imaginary
/// part above 1e-9.
pub fn expected_payoffs(rho_f: &ComplexMatrix, ops: &PayoffOperators) -> Result<Payoff> {
    let expect = |p: &ComplexMatrix| -> Result<f64> {
        let t = p.matmul(rho_f)?.trace()?;
        if t.im.abs() > IMAG_RESIDUE_TOL {
            return Err(Error::ImaginaryResidue { residue: t.im });
        }
        // normalize -0.0
        Ok(t.re + 0.0)
    };
    Ok((expect(&ops.p_a)?, expect(&ops.p_b)?))
}

/// The printed three-term closed form of the quantum Hawk-Dove payoff at
/// `(v, i, d) = (50, 100, 10)`:
///
/// ```text
///   −25 |cos(φA+φB) cos(θA/2) cos(θB/2)|²
///   +50 |sin(φA) cos(θA/2) sin(θB/2) − cos(φB) cos(θB/2) sin(θA/2)|²
///   +15 |sin(φA+φB) cos(θA/2) cos(θB/2) + sin(θA/2) sin(θB/2)|²
/// ```
///
/// It is presented as either player's payoff but coincides with Bob's
/// Eisert payoff; Alice's differs off the diagonal.
pub fn hd_closed_form_payoff(theta_a: f64, phi_a: f64, theta_b: f64, phi_b: f64) -> Result<f64> {
    check_angles(theta_a, phi_a)?;
    check_angles(theta_b, phi_b)?;
    let (sa, ca) = (theta_a / 2.0).sin_cos();
    let (sb, cb) = (theta_b / 2.0).sin_cos();
    let t1 = ((phi_a + phi_b).cos() * ca * cb).powi(2);
    let t2 = (phi_a.sin() * ca * sb - phi_b.cos() * cb * sa).powi(2);
    let t3 = ((phi_a + phi_b).sin() * ca * cb + sa * sb).powi(2);
    Ok(-25.0 * t1 + 50.0 * t2 + 15.0 * t3)
}

/// n×n bimatrix whose cell (i, j) is the quantum payoff of
/// `(strategies[i], strategies[j])`.
pub fn extended_payoff_table(
    spec: &QuantumGameSpec,
    strategies: &[(String, StrategyOperator)],
) -> Result<StrategicGame> {
    if strategies.is_empty() {
        return Err(Error::InvalidGame("no strategies given".into()));
    }
    let payoffs = strategies
        .iter()
        .map(|(_, s_a)| {
            strategies
                .iter()
                .map(|(_, s_b)| spec.payoff(s_a, s_b))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let labels: Vec<String> = strategies.iter().map(|(l, _)| l.clone()).collect();
    StrategicGame::new(labels.clone(), labels, payoffs)
}

/// Cells of two tables agree within the payoff tolerance.
pub fn tables_match(a: &StrategicGame, b: &StrategicGame) -> bool {
    a.rows() == b.rows()
        && a.cols() == b.cols()
        && a.payoffs()
            .iter()
            .flatten()
            .zip(b.payoffs().iter().flatten())
            .all(|(x, y)| (x.0 - y.0).abs() <= PAYOFF_TOL && (x.1 - y.1).abs() <= PAYOFF_TOL)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gamedef::{hawk_dove_game, prisoners_dilemma_game, HawkDoveParams};
    use crate::qmat::{ONE, UNITARY_TOL, ZERO};
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};

    fn hd_ops() -> PayoffOperators {
        payoff_operators(&hawk_dove_game(HawkDoveParams::CANONICAL)).unwrap()
    }

    fn pd_ops() -> PayoffOperators {
        payoff_operators(&prisoners_dilemma_game()).unwrap()
    }

    fn same_density(a: &StateVector, b: &StateVector) -> bool {
        a.outer().approx_eq(&b.outer(), 1e-12)
    }

    fn labeled(items: &[(&str, StrategyOperator)]) -> Vec<(String, StrategyOperator)> {
        items.iter().map(|(l, s)| (l.to_string(), s.clone())).collect()
    }

    #[test]
    fn u_examples() {
        assert!(u_theta_phi(0.0, 0.0)
            .unwrap()
            .approx_eq(&ComplexMatrix::identity(2), 0.0));
        let iz = ComplexMatrix::from_rows([[I, ZERO], [ZERO, -I]]);
        assert!(q_operator().approx_eq(&iz, 1e-15));
        let d = ComplexMatrix::from_rows([[ZERO, ONE], [-ONE, ZERO]]);
        assert!(eisert_dove().approx_eq(&d, 1e-15));
        assert!(!eisert_dove().approx_eq(&ComplexMatrix::pauli_x(), 1e-3));
    }

    #[test]
    fn u_rejects_out_of_domain_angles() {
        assert!(matches!(
            u_theta_phi(-0.1, 0.0),
            Err(Error::OutOfDomain { name: "theta", .. })
        ));
        assert!(matches!(
            u_theta_phi(3.2, 0.0),
            Err(Error::OutOfDomain { name: "theta", .. })
        ));
        assert!(matches!(
            u_theta_phi(1.0, 1.6),
            Err(Error::OutOfDomain { name: "phi", .. })
        ));
        assert!(StrategyOperator::parametrized(0.0, -1.0).is_err());
    }

    #[test]
    fn u_is_unitary() {
        let u = u_theta_phi(PI / 3.0, PI / 5.0).unwrap();
        assert!(u
            .adjoint()
            .matmul(&u)
            .unwrap()
            .approx_eq(&ComplexMatrix::identity(2), 1e-15));
        assert!(q_operator().is_unitary(UNITARY_TOL).unwrap());

        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let u = u_theta_phi(rng.gen_range(0.0..=PI), rng.gen_range(0.0..=FRAC_PI_2)).unwrap();
            assert!(u.is_unitary(UNITARY_TOL).unwrap());
        }
    }

    #[test]
    fn entangler_prepares_i_phase_bell_state() {
        let s = StateVector::basis(4, 0).unwrap().evolve(&entangler()).unwrap();
        assert!(same_density(&s, &StateVector::bell_i_phase()));
        assert!(entangler().is_unitary(UNITARY_TOL).unwrap());
    }

    #[test]
    fn payoff_operator_examples() {
        let hd = hd_ops();
        assert_eq!(hd.diag_a(), vec![-25.0, 50.0, 0.0, 15.0]);
        assert_eq!(hd.diag_b(), vec![-25.0, 0.0, 50.0, 15.0]);
        let pd = pd_ops();
        assert_eq!(pd.diag_a(), vec![3.0, 0.0, 5.0, 1.0]);
        assert_eq!(pd.diag_b(), vec![3.0, 5.0, 0.0, 1.0]);
        let zero = payoff_operators(&hawk_dove_game(HawkDoveParams::new(0.0, 0.0, 0.0))).unwrap();
        assert_eq!(zero.p_a().max_norm(), 0.0);
        assert_eq!(zero.p_b().max_norm(), 0.0);
        assert!(hd.p_a().is_hermitian(0.0) && hd.p_b().is_hermitian(0.0));
    }

    #[test]
    fn strategy_validation() {
        let two_i = ComplexMatrix::identity(2).scale(Complex::new(2.0, 0.0));
        assert!(matches!(StrategyOperator::raw(two_i), Err(Error::NotUnitary { .. })));
        assert!(StrategyOperator::raw(ComplexMatrix::identity(4)).is_err());
        let id = StrategyOperator::identity();
        let x = StrategyOperator::pauli_x();
        assert!(StrategyOperator::mixture(vec![(0.6, id.clone()), (0.6, x.clone())]).is_err());
        assert!(StrategyOperator::mixture(vec![(-0.5, id.clone()), (1.5, x.clone())]).is_err());
        let half = StrategyOperator::binary_mixture(0.5, id.clone(), x.clone()).unwrap();
        assert!(StrategyOperator::mixture(vec![(1.0, half.clone())]).is_err());
        assert!(half.unitary().is_err());
        assert_eq!(half.pure_components().unwrap().len(), 2);
    }

    #[test]
    fn mw_density_examples() {
        let x = StrategyOperator::pauli_x();
        let id = StrategyOperator::identity();

        // (I⊗X) maps the Bell state to (|01> + |10>)/√2.
        let rho = mw_final_density(&InitialState::BellPlus, &id, &x).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let want = if (i == 1 || i == 2) && (j == 1 || j == 2) {
                    0.5
                } else {
                    0.0
                };
                assert!((rho.get(i, j) - Complex::new(want, 0.0)).norm() < 1e-15);
            }
        }

        let rho = mw_final_density(&InitialState::MwIPhase, &id, &id).unwrap();
        assert!(rho.approx_eq(&StateVector::bell_i_phase().outer(), 1e-15));

        let half = StrategyOperator::binary_mixture(0.5, id.clone(), x.clone()).unwrap();
        let rho = mw_final_density(&InitialState::BellPlus, &half, &id).unwrap();
        let a = mw_final_density(&InitialState::BellPlus, &id, &id).unwrap();
        let b = mw_final_density(&InitialState::BellPlus, &x, &id).unwrap();
        let avg = a.add(&b).unwrap().scale(Complex::new(0.5, 0.0));
        assert!(rho.approx_eq(&avg, 1e-15));
        assert!((rho.trace().unwrap() - ONE).norm() < 1e-12);
    }

    #[test]
    fn eisert_state_examples() {
        let id = ComplexMatrix::identity(2);
        let x = ComplexMatrix::pauli_x();
        let basis = |k| StateVector::basis(4, k).unwrap();
        assert!(same_density(&eisert_final_state(&id, &id).unwrap(), &basis(0)));
        assert!(same_density(&eisert_final_state(&x, &x).unwrap(), &basis(3)));
        assert!(same_density(
            &eisert_final_state(&q_operator(), &eisert_dove()).unwrap(),
            &basis(2)
        ));
        let not_unitary = id.scale(Complex::new(2.0, 0.0));
        assert!(matches!(
            eisert_final_state(&not_unitary, &id),
            Err(Error::NotUnitary { .. })
        ));
    }

    #[test]
    fn expected_payoff_examples() {
        let hd = hd_ops();
        let rho = StateVector::basis(4, 1).unwrap().outer();
        assert_eq!(expected_payoffs(&rho, &hd).unwrap(), (50.0, 0.0));

        let qq = eisert_final_state(&q_operator(), &q_operator()).unwrap().outer();
        let (a, b) = expected_payoffs(&qq, &hd).unwrap();
        assert!((a + 25.0).abs() < 1e-9 && (b + 25.0).abs() < 1e-9);

        let rho = mw_final_density(
            &InitialState::BellPlus,
            &StrategyOperator::identity(),
            &StrategyOperator::pauli_x(),
        )
        .unwrap();
        let (a, b) = expected_payoffs(&rho, &hd).unwrap();
        assert!((a - 25.0).abs() < 1e-9 && (b - 25.0).abs() < 1e-9);
    }

    #[test]
    fn expected_payoffs_rejects_non_hermitian_density() {
        let mut entries = vec![ZERO; 16];
        entries[0] = Complex::new(1.0, 0.5);
        let rho = ComplexMatrix::new(4, 4, entries).unwrap();
        assert!(matches!(
            expected_payoffs(&rho, &hd_ops()),
            Err(Error::ImaginaryResidue { .. })
        ));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(hd_closed_form_payoff(0.0, 0.0, 0.0, 0.0).unwrap(), -25.0);
        assert!((hd_closed_form_payoff(PI, 0.0, PI, 0.0).unwrap() - 15.0).abs() < 1e-12);
        assert!(hd_closed_form_payoff(0.0, 0.0, PI, 0.0).unwrap().abs() < 1e-12);
        assert!(hd_closed_form_payoff(0.0, 2.0, 0.0, 0.0).is_err());
    }

    #[test]
    fn closed_form_equals_bob_on_named_strategies() {
        let named = [(0.0, 0.0), (PI, 0.0), (0.0, FRAC_PI_2)];
        let hd = hd_ops();
        for &(ta, pa) in &named {
            for &(tb, pb) in &named {
                let rho = eisert_final_state(&u_theta_phi(ta, pa).unwrap(), &u_theta_phi(tb, pb).unwrap())
                    .unwrap()
                    .outer();
                let (_, bob) = expected_payoffs(&rho, &hd).unwrap();
                let closed = hd_closed_form_payoff(ta, pa, tb, pb).unwrap();
                assert!((closed - bob).abs() < 1e-9, "({ta},{pa}) vs ({tb},{pb})");
            }
        }
    }

    #[test]
    fn eisert_pd_table_matches_printed() {
        let spec = QuantumGameSpec::new(Scheme::Eisert, InitialState::MwIPhase, pd_ops());
        let table = extended_payoff_table(
            &spec,
            &labeled(&[
                ("C", StrategyOperator::identity()),
                ("D", StrategyOperator::eisert_dove()),
                ("Q", StrategyOperator::q()),
            ]),
        )
        .unwrap();
        let printed = StrategicGame::with_labels(
            &["C", "D", "Q"],
            vec![
                vec![(3.0, 3.0), (0.0, 5.0), (1.0, 1.0)],
                vec![(5.0, 0.0), (1.0, 1.0), (0.0, 5.0)],
                vec![(1.0, 1.0), (5.0, 0.0), (3.0, 3.0)],
            ],
        )
        .unwrap();
        assert!(tables_match(&table, &printed), "{table:?}");
    }

    #[test]
    fn eisert_hd_table_differs_from_printed_only_at_qq() {
        let spec = QuantumGameSpec::new(Scheme::Eisert, InitialState::MwIPhase, hd_ops());
        let table = extended_payoff_table(
            &spec,
            &labeled(&[
                ("H", StrategyOperator::identity()),
                ("D", StrategyOperator::eisert_dove()),
                ("Q", StrategyOperator::q()),
            ]),
        )
        .unwrap();
        let printed = [
            [(-25.0, -25.0), (50.0, 0.0), (15.0, 15.0)],
            [(0.0, 50.0), (15.0, 15.0), (50.0, 0.0)],
            [(15.0, 15.0), (0.0, 50.0), (15.0, 15.0)],
        ];
        for (i, row) in printed.iter().enumerate() {
            for (j, &cell) in row.iter().enumerate() {
                let (a, b) = table.cell(i, j);
                let want = if (i, j) == (2, 2) { (-25.0, -25.0) } else { cell };
                assert!((a - want.0).abs() < 1e-9 && (b - want.1).abs() < 1e-9, "cell ({i},{j})");
            }
        }
    }

    #[test]
    fn mw_table_with_half_mixture() {
        let spec = QuantumGameSpec::new(Scheme::MarinattoWeber, InitialState::BellPlus, hd_ops());
        let half = StrategyOperator::binary_mixture(0.5, StrategyOperator::identity(), StrategyOperator::eisert_dove())
            .unwrap();
        let table = extended_payoff_table(
            &spec,
            &labeled(&[
                ("H", StrategyOperator::identity()),
                ("D", StrategyOperator::pauli_x()),
                ("R", half),
            ]),
        )
        .unwrap();
        // Pure cells are the corners of -60pq + 30(p+q) - 5; every R cell is 10.
        let expected = [
            [(-5.0, -5.0), (25.0, 25.0), (10.0, 10.0)],
            [(25.0, 25.0), (-5.0, -5.0), (10.0, 10.0)],
            [(10.0, 10.0), (10.0, 10.0), (10.0, 10.0)],
        ];
        for (i, row) in expected.iter().enumerate() {
            for (j, &(ea, eb)) in row.iter().enumerate() {
                let (a, b) = table.cell(i, j);
                assert!((a - ea).abs() < 1e-9 && (b - eb).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn mw_from_product_state_reproduces_classical_game() {
        let zero = InitialState::custom(StateVector::basis(4, 0).unwrap()).unwrap();
        for game in [hawk_dove_game(HawkDoveParams::CANONICAL), prisoners_dilemma_game()] {
            let ops = payoff_operators(&game).unwrap();
            for dove in [StrategyOperator::pauli_x(), StrategyOperator::eisert_dove()] {
                let spec = QuantumGameSpec::new(Scheme::MarinattoWeber, zero.clone(), ops.clone());
                let table = extended_payoff_table(&spec, &labeled(&[("0", StrategyOperator::identity()), ("1", dove)]))
                    .unwrap();
                assert!(tables_match(&table, &game));
            }
        }
    }

    #[test]
    fn extended_tables_are_reflection_symmetric() {
        let strategies = labeled(&[
            ("H", StrategyOperator::identity()),
            ("D", StrategyOperator::eisert_dove()),
            ("Q", StrategyOperator::q()),
            (
                "R",
                StrategyOperator::binary_mixture(0.5, StrategyOperator::identity(), StrategyOperator::eisert_dove())
                    .unwrap(),
            ),
        ]);
        for ops in [hd_ops(), pd_ops()] {
            for scheme in [Scheme::Eisert, Scheme::MarinattoWeber] {
                let spec = QuantumGameSpec::new(scheme, InitialState::BellPlus, ops.clone());
                let t = extended_payoff_table(&spec, &strategies).unwrap();
                assert!(t.is_symmetric(1e-9), "{scheme:?}");
            }
        }
    }

    #[test]
    fn empty_strategy_list_is_an_error() {
        let spec = QuantumGameSpec::new(Scheme::Eisert, InitialState::BellPlus, hd_ops());
        assert!(extended_payoff_table(&spec, &[]).is_err());
    }

    fn arb_pure() -> impl Strategy<Value = StrategyOperator> {
        (0.0..=PI, 0.0..=FRAC_PI_2).prop_map(|(t, p)| StrategyOperator::parametrized(t, p).unwrap())
    }

    fn arb_move() -> impl Strategy<Value = StrategyOperator> {
        prop_oneof![
            arb_pure(),
            (prop::collection::vec((0.01..1.0f64, arb_pure()), 1..4)).prop_map(|parts| {
                let total: f64 = parts.iter().map(|(w, _)| w).sum();
                StrategyOperator::mixture(parts.into_iter().map(|(w, s)| (w / total, s)).collect()).unwrap()
            }),
        ]
    }

    proptest! {
        #[test]
        fn mw_density_is_trace_one_and_hermitian(a in arb_move(), b in arb_move(), bell in any::<bool>()) {
            let init = if bell { InitialState::BellPlus } else { InitialState::MwIPhase };
            let rho = mw_final_density(&init, &a, &b).unwrap();
            prop_assert!((rho.trace().unwrap() - ONE).norm() <= 1e-12);
            prop_assert!(rho.is_hermitian(1e-12));
        }

        #[test]
        fn eisert_state_is_normalized(a in arb_pure(), b in arb_pure()) {
            let s = eisert_final_state(&a.unitary().unwrap(), &b.unitary().unwrap()).unwrap();
            prop_assert!((s.norm_sqr() - 1.0).abs() <= 1e-12);
        }
    }
}
