//! Claim-by-claim recomputation of the published numbers.
//!
//! Printed values live here as golden fixtures and are only ever compared
//! against, never fed into a computation. A claim is `MATCH` when every
//! reported value is within 1e-6 of the recomputed one. Known
//! discrepancies fall into four families:
//!
//! * `D1` quantum Hawk-Dove (Q,Q) cell: printed (15,15), Eisert gives (−25,−25)
//! * `D2` the three-term closed form is Bob's payoff, not Alice's
//! * `D3` random-strategy (R) cells under the half/half reading
//! * `D4` classical Hawk-Dove pure Nash set: printed {(D,D)}, actual {(H,D),(D,H)}

use std::collections::BTreeSet;
use std::f64::consts::{FRAC_PI_2, PI};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::cli::strategies;
use crate::error::Result;
use crate::gamedef::{hawk_dove_game, prisoners_dilemma_game, HawkDoveParams, StrategicGame};
use crate::mixedscan::{grid_argmax, grid_scan, hd_mixed_payoff, pd_mixed_payoff, region_above, Surface};
use crate::qscheme::{
    eisert_final_state, expected_payoffs, extended_payoff_table, hd_closed_form_payoff, mw_final_density,
    payoff_operators, u_theta_phi, InitialState, PayoffOperators, QuantumGameSpec, Scheme, StrategyOperator,
};
use crate::solvers::{ess_check, mixed_nash_2x2, pareto_optimal, pure_nash};

pub const MATCH_TOL: f64 = 1e-6;
pub const EQ14_SAMPLES: usize = 1000;
const EQ14_SEED: u64 = 0x5eed_1e55;
const REGION_RESOLUTION: usize = 1001;
const ARGMAX_RESOLUTION: usize = 101;

pub const KNOWN_FAMILIES: [&str; 4] = ["D1", "D2", "D3", "D4"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Match,
    Discrepancy,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClaimReport {
    pub claim_id: String,
    pub location: String,
    pub reported: Vec<f64>,
    pub computed: Vec<f64>,
    pub verdict: Verdict,
    /// Discrepancy family; absent for matches.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    pub note: String,
}

impl ClaimReport {
    /// `family` is the family a mismatch is filed under; a mismatch on a
    /// claim without one is filed as `UNEXPECTED`.
    pub fn new(
        claim_id: &str,
        location: &str,
        reported: Vec<f64>,
        computed: Vec<f64>,
        family: Option<&str>,
        note: impl Into<String>,
    ) -> Self {
        let matches =
            reported.len() == computed.len() && reported.iter().zip(&computed).all(|(r, c)| (r - c).abs() <= MATCH_TOL);
        let (verdict, family) = if matches {
            (Verdict::Match, None)
        } else {
            (Verdict::Discrepancy, Some(family.unwrap_or("UNEXPECTED").to_string()))
        };
        Self {
            claim_id: claim_id.to_string(),
            location: location.to_string(),
            reported,
            computed: computed.into_iter().map(|x| x + 0.0).collect(),
            verdict,
            family,
            note: note.into(),
        }
    }

    pub fn is_match(&self) -> bool {
        self.verdict == Verdict::Match
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub matched: usize,
    pub discrepancies: usize,
    pub families: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClaimLedger {
    pub claims: Vec<ClaimReport>,
    pub summary: Summary,
}

impl ClaimLedger {
    fn from_claims(claims: Vec<ClaimReport>) -> Self {
        let matched = claims.iter().filter(|c| c.is_match()).count();
        let families: BTreeSet<String> = claims.iter().filter_map(|c| c.family.clone()).collect();
        Self {
            summary: Summary {
                total: claims.len(),
                matched,
                discrepancies: claims.len() - matched,
                families: families.into_iter().collect(),
            },
            claims,
        }
    }

    pub fn get(&self, claim_id: &str) -> Option<&ClaimReport> {
        self.claims.iter().find(|c| c.claim_id == claim_id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("ledger serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

fn table(labels: &[&str], cells: &[&[(f64, f64)]]) -> StrategicGame {
    StrategicGame::with_labels(labels, cells.iter().map(|r| r.to_vec()).collect()).expect("golden table")
}

mod golden {
    use super::*;

    pub fn classical_pd() -> StrategicGame {
        table(&["C", "D"], &[&[(3.0, 3.0), (0.0, 5.0)], &[(5.0, 0.0), (1.0, 1.0)]])
    }

    pub fn classical_hd() -> StrategicGame {
        table(
            &["H", "D"],
            &[&[(-25.0, -25.0), (50.0, 0.0)], &[(0.0, 50.0), (15.0, 15.0)]],
        )
    }

    pub fn quantum_pd() -> StrategicGame {
        table(
            &["C", "D", "Q"],
            &[
                &[(3.0, 3.0), (0.0, 5.0), (1.0, 1.0)],
                &[(5.0, 0.0), (1.0, 1.0), (0.0, 5.0)],
                &[(1.0, 1.0), (5.0, 0.0), (3.0, 3.0)],
            ],
        )
    }

    pub fn quantum_hd() -> StrategicGame {
        table(
            &["H", "D", "Q"],
            &[
                &[(-25.0, -25.0), (50.0, 0.0), (15.0, 15.0)],
                &[(0.0, 50.0), (15.0, 15.0), (50.0, 0.0)],
                &[(15.0, 15.0), (0.0, 50.0), (15.0, 15.0)],
            ],
        )
    }

    pub fn extended_hd() -> StrategicGame {
        table(
            &["H", "D", "Q", "R"],
            &[
                &[(-25.0, -25.0), (50.0, 0.0), (15.0, 15.0), (25.0, 25.0)],
                &[(0.0, 50.0), (15.0, 15.0), (50.0, 0.0), (25.0, 25.0)],
                &[(15.0, 15.0), (0.0, 50.0), (15.0, 15.0), (5.0, 5.0)],
                &[(25.0, 25.0), (25.0, 25.0), (5.0, 5.0), (25.0, 25.0)],
            ],
        )
    }

    pub fn extended_pd() -> StrategicGame {
        table(
            &["C", "D", "Q", "R"],
            &[
                &[(3.0, 3.0), (0.0, 5.0), (1.0, 1.0), (2.5, 2.5)],
                &[(5.0, 0.0), (1.0, 1.0), (0.0, 5.0), (2.5, 2.5)],
                &[(1.0, 1.0), (5.0, 0.0), (3.0, 3.0), (2.5, 2.5)],
                &[(2.5, 2.5), (2.5, 2.5), (2.5, 2.5), (2.5, 2.5)],
            ],
        )
    }

    pub const HD_MAX: f64 = 25.0;
    pub const PD_MAX: f64 = 2.5;
    /// Printed bounding box `(p_min, p_max, q_min, q_max)` of the >15 region.
    pub const REGION_BOX: (f64, f64, f64, f64) = (0.66, 1.0, 0.0, 0.34);
}

fn flatten(game: &StrategicGame) -> Vec<f64> {
    game.payoffs().iter().flatten().flat_map(|&(a, b)| [a, b]).collect()
}

fn flatten_cells(cells: &[(usize, usize)]) -> Vec<f64> {
    cells.iter().flat_map(|&(i, j)| [i as f64, j as f64]).collect()
}

fn flatten_points(points: &[(f64, f64)]) -> Vec<f64> {
    points.iter().flat_map(|&(p, q)| [p, q]).collect()
}

fn flag(b: bool) -> f64 {
    if b {
        1.0
    } else {
        0.0
    }
}

fn hd_ops() -> Result<PayoffOperators> {
    payoff_operators(&hawk_dove_game(HawkDoveParams::CANONICAL))
}

fn pd_ops() -> Result<PayoffOperators> {
    payoff_operators(&prisoners_dilemma_game())
}

fn labeled(labels: &str, scheme: Scheme) -> Result<Vec<(String, StrategyOperator)>> {
    strategies::resolve_list(labels, scheme)
}

/// Cell-by-cell claims for a table whose computed counterpart is given.
fn cell_claims(
    prefix: &str,
    location: &str,
    printed: &StrategicGame,
    computed: &StrategicGame,
    family_of: impl Fn(&str, &str) -> Option<&'static str>,
    note_of: impl Fn(&str, &str) -> String,
) -> Vec<ClaimReport> {
    let mut out = Vec::new();
    for (i, la) in printed.labels_a().iter().enumerate() {
        for (j, lb) in printed.labels_b().iter().enumerate() {
            let (ra, rb) = printed.cell(i, j);
            let (ca, cb) = computed.cell(i, j);
            out.push(ClaimReport::new(
                &format!("{prefix}-{la}{lb}"),
                &format!("{location}, cell ({la},{lb})"),
                vec![ra, rb],
                vec![ca, cb],
                family_of(la, lb),
                note_of(la, lb),
            ));
        }
    }
    out
}

/// Joins the Eisert H/D/Q block with R cells from the Bell-state
/// Marinatto-Weber computation into one 4x4 table.
fn hybrid_table(eisert: &StrategicGame, mw_with_r: &StrategicGame) -> Result<StrategicGame> {
    let n = mw_with_r.rows();
    let r = n - 1;
    let payoffs = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == r || j == r {
                        mw_with_r.cell(i, j)
                    } else {
                        eisert.cell(i, j)
                    }
                })
                .collect()
        })
        .collect();
    StrategicGame::new(mw_with_r.labels_a().to_vec(), mw_with_r.labels_b().to_vec(), payoffs)
}

pub fn verify() -> Result<ClaimLedger> {
    let mut claims = Vec::new();
    claims.extend(classical_table_claims());
    claims.extend(quantum_table_claims()?);
    claims.extend(surface_claims()?);
    claims.extend(equilibrium_claims()?);
    claims.extend(closed_form_claims()?);
    Ok(ClaimLedger::from_claims(claims))
}

fn classical_table_claims() -> Vec<ClaimReport> {
    vec![
        ClaimReport::new(
            "T4-ALL",
            "classical Prisoner's dilemma payoff table",
            flatten(&golden::classical_pd()),
            flatten(&prisoners_dilemma_game()),
            None,
            "all 4 cells",
        ),
        ClaimReport::new(
            "T9-ALL",
            "classical Hawk-Dove payoff table at v=50, i=100, d=10",
            flatten(&golden::classical_hd()),
            flatten(&hawk_dove_game(HawkDoveParams::CANONICAL)),
            None,
            "all 4 cells",
        ),
    ]
}

fn quantum_table_claims() -> Result<Vec<ClaimReport>> {
    let mut out = Vec::new();
    let eisert_hd = QuantumGameSpec::new(Scheme::Eisert, InitialState::MwIPhase, hd_ops()?);
    let eisert_pd = QuantumGameSpec::new(Scheme::Eisert, InitialState::MwIPhase, pd_ops()?);
    let mw_hd = QuantumGameSpec::new(Scheme::MarinattoWeber, InitialState::BellPlus, hd_ops()?);
    let mw_pd = QuantumGameSpec::new(Scheme::MarinattoWeber, InitialState::BellPlus, pd_ops()?);

    // Quantum Prisoner's dilemma, Eisert scheme.
    let qpd = extended_payoff_table(&eisert_pd, &labeled("C,D,Q", Scheme::Eisert)?)?;
    let mut with_x = labeled("C,D,Q", Scheme::Eisert)?;
    with_x[1].1 = StrategyOperator::pauli_x();
    let qpd_x = extended_payoff_table(&eisert_pd, &with_x)?;
    let x_note = if crate::qscheme::tables_match(&qpd_x, &qpd) {
        "D = U(pi,0); D = X gives the same table".to_string()
    } else {
        format!(
            "D = U(pi,0); with D = X instead the off-diagonal cells transpose: {:?}",
            flatten(&crate::cli::format::rounded(&qpd_x))
        )
    };
    out.push(ClaimReport::new(
        "T7-ALL",
        "quantum Prisoner's dilemma payoff table (C,D,Q)",
        flatten(&golden::quantum_pd()),
        flatten(&qpd),
        None,
        x_note,
    ));

    // Quantum Hawk-Dove, Eisert scheme.
    let qhd = extended_payoff_table(&eisert_hd, &labeled("H,D,Q", Scheme::Eisert)?)?;
    let mw_eq9 = QuantumGameSpec::new(Scheme::MarinattoWeber, InitialState::MwIPhase, hd_ops()?);
    let (qq_mw_a, qq_mw_b) = mw_eq9.payoff(&StrategyOperator::q(), &StrategyOperator::q())?;
    out.extend(cell_claims(
        "T16",
        "quantum Hawk-Dove payoff table (H,D,Q)",
        &golden::quantum_hd(),
        &qhd,
        |a, b| (a == "Q" && b == "Q").then_some("D1"),
        |a, b| {
            if a == "Q" && b == "Q" {
                format!(
                    "Eisert scheme; Marinatto-Weber on (|00>+i|11>)/sqrt2 gives ({}, {}); neither reproduces (15,15)",
                    crate::cli::format::fmt_sig9(qq_mw_a),
                    crate::cli::format::fmt_sig9(qq_mw_b)
                )
            } else {
                "Eisert scheme".to_string()
            }
        },
    ));

    // Extended Hawk-Dove table with R.
    let mw_hdr = extended_payoff_table(&mw_hd, &labeled("H,D,Q,R", Scheme::MarinattoWeber)?)?;
    let ext_hd = hybrid_table(&qhd, &mw_hdr)?;
    out.extend(cell_claims(
        "T20",
        "Hawk-Dove payoff table with random strategy R",
        &golden::extended_hd(),
        &ext_hd,
        |a, b| {
            if a == "R" || b == "R" {
                Some("D3")
            } else if a == "Q" && b == "Q" {
                Some("D1")
            } else {
                None
            }
        },
        |a, b| {
            if a == "R" || b == "R" {
                "R = half/half mixture of H and D, Marinatto-Weber on (|00>+|11>)/sqrt2".to_string()
            } else {
                "Eisert scheme".to_string()
            }
        },
    ));
    let argmax = hd_mixed_payoff(0.0, 1.0, HawkDoveParams::CANONICAL)?;
    let (rr_a, rr_b) = golden::extended_hd().cell(3, 3);
    out.push(ClaimReport::new(
        "T20-RR-ARGMAX",
        "Hawk-Dove payoff table with random strategy R, cell (R,R)",
        vec![rr_a, rr_b],
        vec![argmax, argmax],
        Some("D3"),
        "alternative reading: R as the surface maximizer (p,q)=(0,1)",
    ));

    // Supplementary extended Prisoner's dilemma table with R.
    let mw_pdr = extended_payoff_table(&mw_pd, &labeled("C,D,Q,R", Scheme::MarinattoWeber)?)?;
    let ext_pd = hybrid_table(&qpd, &mw_pdr)?;
    out.extend(cell_claims(
        "SQPD",
        "supplementary quantum Prisoner's dilemma table with random strategy R",
        &golden::extended_pd(),
        &ext_pd,
        |a, b| (a == "R" || b == "R").then_some("D3"),
        |a, b| {
            if a == "R" || b == "R" {
                "R = half/half mixture of C and D, Marinatto-Weber on (|00>+|11>)/sqrt2".to_string()
            } else {
                "Eisert scheme".to_string()
            }
        },
    ));
    let argmax = pd_mixed_payoff(0.0, 1.0)?;
    let (rr_a, rr_b) = golden::extended_pd().cell(3, 3);
    out.push(ClaimReport::new(
        "SQPD-RR-ARGMAX",
        "supplementary quantum Prisoner's dilemma table with random strategy R, cell (R,R)",
        vec![rr_a, rr_b],
        vec![argmax, argmax],
        Some("D3"),
        "alternative reading: R as the surface maximizer (p,q)=(0,1)",
    ));

    // Bit-flip sign convention is invisible under Marinatto-Weber.
    let mut with_u = labeled("H,D,Q,R", Scheme::MarinattoWeber)?;
    with_u[1].1 = StrategyOperator::eisert_dove();
    with_u[3].1 = strategies::random_half(Scheme::Eisert);
    let mw_hdr_u = extended_payoff_table(&mw_hd, &with_u)?;
    out.push(ClaimReport::new(
        "DOP-MW",
        "Dove as X versus U(pi,0)",
        flatten(&mw_hdr),
        flatten(&mw_hdr_u),
        None,
        "Marinatto-Weber Hawk-Dove table (H,D,Q,R): reported uses X, computed uses U(pi,0)",
    ));
    Ok(out)
}

fn surface_claims() -> Result<Vec<ClaimReport>> {
    let mut out = Vec::new();
    let hd = Surface::HawkDove(HawkDoveParams::CANONICAL);
    let ops = hd_ops()?;
    let pd_ops = pd_ops()?;
    let corners = [(1.0, 1.0), (1.0, 0.0), (0.0, 1.0), (0.0, 0.0)];

    let oracle = |p: f64, q: f64, ops: &PayoffOperators| -> Result<(f64, f64)> {
        let mix = |w| StrategyOperator::binary_mixture(w, StrategyOperator::identity(), StrategyOperator::pauli_x());
        expected_payoffs(&mw_final_density(&InitialState::BellPlus, &mix(p)?, &mix(q)?)?, ops)
    };

    let printed_hd = |p: f64, q: f64| -60.0 * p * q + 30.0 * (p + q) - 5.0;
    let printed_pd = |p: f64, q: f64| 0.5 * (4.0 - 2.0 * p * q + p + q);

    let mut reported = Vec::new();
    let mut computed = Vec::new();
    for &(p, q) in &corners {
        reported.push(printed_hd(p, q));
        computed.push(oracle(p, q, &ops)?.0);
    }
    out.push(ClaimReport::new(
        "EQ19-CORNERS",
        "Hawk-Dove mixed payoff -60pq+30(p+q)-5 at (1,1),(1,0),(0,1),(0,0)",
        reported,
        computed,
        None,
        "computed through the Bell-state density matrix",
    ));

    let mut max_dev: f64 = 0.0;
    let mut max_dev_pd: f64 = 0.0;
    for i in 0..=20 {
        for j in 0..=20 {
            let (p, q) = (i as f64 / 20.0, j as f64 / 20.0);
            let (a, b) = oracle(p, q, &ops)?;
            max_dev = max_dev
                .max((a - printed_hd(p, q)).abs())
                .max((b - printed_hd(p, q)).abs());
            let (a, b) = oracle(p, q, &pd_ops)?;
            max_dev_pd = max_dev_pd
                .max((a - printed_pd(p, q)).abs())
                .max((b - printed_pd(p, q)).abs());
        }
    }
    out.push(ClaimReport::new(
        "EQ19-LATTICE",
        "Hawk-Dove mixed payoff -60pq+30(p+q)-5",
        vec![0.0],
        vec![max_dev],
        None,
        "max |closed form - density-matrix payoff| over the 21x21 lattice, both players",
    ));

    let grid = grid_scan(hd, ARGMAX_RESOLUTION)?;
    out.push(ClaimReport::new(
        "EQ19-MAX",
        "maximum of the Hawk-Dove mixed payoff",
        vec![golden::HD_MAX],
        vec![grid.max_payoff()],
        None,
        format!("{ARGMAX_RESOLUTION}x{ARGMAX_RESOLUTION} lattice"),
    ));
    out.push(ClaimReport::new(
        "EQ19-ARGMAX",
        "maximizers of the Hawk-Dove mixed payoff",
        vec![0.0, 1.0, 1.0, 0.0],
        flatten_points(&grid_argmax(&grid)),
        None,
        "(p,q) = (0,1) and (1,0)",
    ));

    let region = region_above(hd, 15.0, REGION_RESOLUTION)?;
    let (p0, p1, q0, q1) = golden::REGION_BOX;
    let lobe: Vec<_> = region.members().iter().filter(|c| c.p >= c.q).collect();
    let contained = !lobe.is_empty() && lobe.iter().all(|c| c.p > p0 && c.p <= p1 && c.q >= q0 && c.q < q1);
    let bbox = |cells: &[&crate::mixedscan::GridCell]| {
        cells.iter().fold((1.0f64, 0.0f64, 1.0f64, 0.0f64), |(a, b, c, d), m| {
            (a.min(m.p), b.max(m.p), c.min(m.q), d.max(m.q))
        })
    };
    let (lp0, lp1, lq0, lq1) = bbox(&lobe);
    out.push(ClaimReport::new(
        "FIG1B-BOX",
        "region where the Hawk-Dove mixed payoff exceeds 15: 0.66<p<1, 0<q<0.34",
        vec![1.0],
        vec![flag(contained)],
        None,
        format!(
            "containment of the p>=q lobe at resolution {REGION_RESOLUTION}; lobe box p in [{}, {}], q in [{}, {}]; \
             the surface is symmetric so the mirror lobe (p<->q) also exceeds 15",
            lp0, lp1, lq0, lq1
        ),
    ));

    let mut reported = Vec::new();
    let mut computed = Vec::new();
    for &(p, q) in &corners {
        reported.push(printed_pd(p, q));
        computed.push(oracle(p, q, &pd_ops)?.0);
    }
    out.push(ClaimReport::new(
        "PDS-CORNERS",
        "Prisoner's dilemma mixed payoff (4-2pq+p+q)/2 at (1,1),(1,0),(0,1),(0,0)",
        reported,
        computed,
        None,
        "computed through the Bell-state density matrix",
    ));
    out.push(ClaimReport::new(
        "PDS-LATTICE",
        "Prisoner's dilemma mixed payoff (4-2pq+p+q)/2",
        vec![0.0],
        vec![max_dev_pd],
        None,
        "max |closed form - density-matrix payoff| over the 21x21 lattice, both players",
    ));
    let grid = grid_scan(Surface::PrisonersDilemma, ARGMAX_RESOLUTION)?;
    out.push(ClaimReport::new(
        "PDS-MAX",
        "maximum of the Prisoner's dilemma mixed payoff",
        vec![golden::PD_MAX],
        vec![grid.max_payoff()],
        None,
        format!("{ARGMAX_RESOLUTION}x{ARGMAX_RESOLUTION} lattice"),
    ));
    out.push(ClaimReport::new(
        "PDS-ARGMAX",
        "maximizers of the Prisoner's dilemma mixed payoff",
        vec![0.0, 1.0, 1.0, 0.0],
        flatten_points(&grid_argmax(&grid)),
        None,
        "(p,q) = (0,1) and (1,0)",
    ));
    Ok(out)
}

fn equilibrium_claims() -> Result<Vec<ClaimReport>> {
    let mut out = Vec::new();
    let pd = prisoners_dilemma_game();
    let hd = hawk_dove_game(HawkDoveParams::CANONICAL);

    out.push(ClaimReport::new(
        "PD-NE-PURE",
        "classical Prisoner's dilemma: defecting is dominant, Nash (D,D)",
        vec![1.0, 1.0],
        flatten_cells(&pure_nash(&pd)),
        None,
        "cell indices (row, col)",
    ));
    out.push(ClaimReport::new(
        "PD-NE-MIXED",
        "classical Prisoner's dilemma mixed Nash (p*,q*) = (0,0)",
        vec![0.0, 0.0],
        flatten_points(&mixed_nash_2x2(&pd)?),
        None,
        "all mixed equilibria found",
    ));
    let pd_front = pareto_optimal(&pd);
    out.push(ClaimReport::new(
        "PD-PARETO-CC",
        "classical Prisoner's dilemma: (C,C) is Pareto optimal",
        vec![1.0],
        vec![flag(pd_front.contains(&(0, 0)))],
        None,
        "",
    ));
    out.push(ClaimReport::new(
        "PD-PARETO-DD",
        "classical Prisoner's dilemma: (D,D) is worse for both than (C,C)",
        vec![0.0],
        vec![flag(pd_front.contains(&(1, 1)))],
        None,
        "1 = (D,D) Pareto optimal",
    ));

    out.push(ClaimReport::new(
        "HD-NE-PURE",
        "classical Hawk-Dove Nash equilibrium is (D,D)",
        vec![1.0, 1.0],
        flatten_cells(&pure_nash(&hd)),
        Some("D4"),
        "computed pure Nash set is {(H,D),(D,H)}; (D,D) is not an equilibrium since 50 > 15",
    ));
    out.push(ClaimReport::new(
        "HD-PARETO-DD",
        "classical Hawk-Dove: (D,D) is Pareto optimal",
        vec![1.0],
        vec![flag(pareto_optimal(&hd).contains(&(1, 1)))],
        None,
        "",
    ));

    // Random strategy R: ESS, hence Nash and Pareto.
    let printed = golden::extended_hd();
    let r = 3;
    out.push(ClaimReport::new(
        "ESS-R-T20",
        "R is an evolutionarily stable strategy (printed table)",
        vec![1.0],
        vec![flag(ess_check(&printed, r)?)],
        None,
        "Maynard-Smith conditions on the printed 4x4 table",
    ));
    out.push(ClaimReport::new(
        "ESS-R-T20-NASH",
        "R implies Nash (printed table)",
        vec![1.0],
        vec![flag(pure_nash(&printed).contains(&(r, r)))],
        None,
        "",
    ));
    out.push(ClaimReport::new(
        "ESS-R-T20-PARETO",
        "R implies Pareto optimal (printed table)",
        vec![1.0],
        vec![flag(pareto_optimal(&printed).contains(&(r, r)))],
        None,
        "",
    ));

    let mw_hd = QuantumGameSpec::new(Scheme::MarinattoWeber, InitialState::BellPlus, hd_ops()?);
    let recomputed = extended_payoff_table(&mw_hd, &labeled("H,D,R", Scheme::MarinattoWeber)?)?;
    let r = 2;
    out.push(ClaimReport::new(
        "ESS-R-MW",
        "R is an evolutionarily stable strategy (recomputed table)",
        vec![1.0],
        vec![flag(ess_check(&recomputed, r)?)],
        Some("D3"),
        "Marinatto-Weber on (|00>+|11>)/sqrt2 over (H,D,R)",
    ));
    out.push(ClaimReport::new(
        "ESS-R-MW-NASH",
        "R implies Nash (recomputed table)",
        vec![1.0],
        vec![flag(pure_nash(&recomputed).contains(&(r, r)))],
        Some("D3"),
        "",
    ));
    out.push(ClaimReport::new(
        "ESS-R-MW-PARETO",
        "R implies Pareto optimal (recomputed table)",
        vec![1.0],
        vec![flag(pareto_optimal(&recomputed).contains(&(r, r)))],
        Some("D3"),
        "(R,R) = (10,10) is dominated by (H,D) = (25,25)",
    ));
    Ok(out)
}

fn closed_form_claims() -> Result<Vec<ClaimReport>> {
    let mut out = Vec::new();
    let ops = hd_ops()?;
    let eisert = |ta: f64, pa: f64, tb: f64, pb: f64| -> Result<(f64, f64)> {
        let s = eisert_final_state(&u_theta_phi(ta, pa)?, &u_theta_phi(tb, pb)?)?;
        expected_payoffs(&s.outer(), &ops)
    };

    let named = [(0.0, 0.0), (PI, 0.0), (0.0, FRAC_PI_2)];
    let mut closed = Vec::new();
    let mut alice = Vec::new();
    let mut bob = Vec::new();
    for &(ta, pa) in &named {
        for &(tb, pb) in &named {
            closed.push(hd_closed_form_payoff(ta, pa, tb, pb)?);
            let (a, b) = eisert(ta, pa, tb, pb)?;
            alice.push(a);
            bob.push(b);
        }
    }
    out.push(ClaimReport::new(
        "EQ14-BOB",
        "three-term closed-form quantum Hawk-Dove payoff, Bob",
        closed.clone(),
        bob,
        None,
        "(H,D,Q) x (H,D,Q), row-major, Eisert scheme",
    ));
    out.push(ClaimReport::new(
        "EQ14-ALICE",
        "three-term closed-form quantum Hawk-Dove payoff, presented as either player's",
        closed,
        alice,
        Some("D2"),
        "(H,D,Q) x (H,D,Q), row-major, Eisert scheme; e.g. at (H,D) the form gives 0, Alice gets 50",
    ));

    let mut rng = ChaCha8Rng::seed_from_u64(EQ14_SEED);
    let mut dev_a: f64 = 0.0;
    let mut dev_b: f64 = 0.0;
    for _ in 0..EQ14_SAMPLES {
        let ta = rng.gen_range(0.0..=PI);
        let pa = rng.gen_range(0.0..=FRAC_PI_2);
        let tb = rng.gen_range(0.0..=PI);
        let pb = rng.gen_range(0.0..=FRAC_PI_2);
        let form = hd_closed_form_payoff(ta, pa, tb, pb)?;
        let (a, b) = eisert(ta, pa, tb, pb)?;
        dev_a = dev_a.max((form - a).abs());
        dev_b = dev_b.max((form - b).abs());
    }
    out.push(ClaimReport::new(
        "EQ14-SAMPLED-BOB",
        "three-term closed-form quantum Hawk-Dove payoff, Bob",
        vec![0.0],
        vec![dev_b],
        None,
        format!("max deviation over {EQ14_SAMPLES} seeded random (theta,phi) samples"),
    ));
    out.push(ClaimReport::new(
        "EQ14-SAMPLED-ALICE",
        "three-term closed-form quantum Hawk-Dove payoff, presented as either player's",
        vec![0.0],
        vec![dev_a],
        Some("D2"),
        format!(
            "max deviation from Alice's payoff over {EQ14_SAMPLES} seeded random (theta,phi) samples; \
             Bob's max deviation is {dev_b:e}"
        ),
    ));
    Ok(out)
}
