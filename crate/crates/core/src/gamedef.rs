//! Two-player strategic-form games.
//!
//! Alice always plays rows, Bob columns. Payoffs are stored as `f64`
//! pairs `(a_ij, b_ij)`.

use serde_json::Value;

use crate::error::{Error, Result};

pub type Payoff = (f64, f64);

#[derive(Debug, Clone, PartialEq)]
pub struct StrategicGame {
    labels_a: Vec<String>,
    labels_b: Vec<String>,
    payoffs: Vec<Vec<Payoff>>,
}

impl StrategicGame {
    pub fn new(labels_a: Vec<String>, labels_b: Vec<String>, payoffs: Vec<Vec<Payoff>>) -> Result<Self> {
        if labels_a.is_empty() || labels_b.is_empty() {
            return Err(Error::InvalidGame("strategy label lists must be nonempty".into()));
        }
        if payoffs.len() != labels_a.len() {
            return Err(Error::InvalidGame(format!(
                "{} payoff rows for {} row labels",
                payoffs.len(),
                labels_a.len()
            )));
        }
        for (i, row) in payoffs.iter().enumerate() {
            if row.len() != labels_b.len() {
                return Err(Error::InvalidGame(format!(
                    "payoff row {i} has {} cells for {} column labels",
                    row.len(),
                    labels_b.len()
                )));
            }
            if let Some(j) = row.iter().position(|(a, b)| !a.is_finite() || !b.is_finite()) {
                return Err(Error::InvalidGame(format!("payoff ({i}, {j}) is not finite")));
            }
        }
        Ok(Self {
            labels_a,
            labels_b,
            payoffs,
        })
    }

    /// Convenience constructor for symmetric label sets.
    pub fn with_labels(labels: &[&str], payoffs: Vec<Vec<Payoff>>) -> Result<Self> {
        let labels: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
        Self::new(labels.clone(), labels, payoffs)
    }

    pub fn labels_a(&self) -> &[String] {
        &self.labels_a
    }

    pub fn labels_b(&self) -> &[String] {
        &self.labels_b
    }

    pub fn payoffs(&self) -> &[Vec<Payoff>] {
        &self.payoffs
    }

    pub fn rows(&self) -> usize {
        self.labels_a.len()
    }

    pub fn cols(&self) -> usize {
        self.labels_b.len()
    }

    pub fn cell(&self, row: usize, col: usize) -> Payoff {
        self.payoffs[row][col]
    }

    pub fn ensure_2x2(&self) -> Result<()> {
        if self.rows() != 2 || self.cols() != 2 {
            return Err(Error::NotTwoByTwo {
                rows: self.rows(),
                cols: self.cols(),
            });
        }
        Ok(())
    }

    /// First cell violating `b_ij == a_ji`, if any.
    pub fn asymmetry(&self, tol: f64) -> Option<(usize, usize)> {
        if self.rows() != self.cols() {
            return Some((0, 0));
        }
        let n = self.rows();
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .find(|&(i, j)| (self.payoffs[i][j].1 - self.payoffs[j][i].0).abs() > tol)
    }

    pub fn is_symmetric(&self, tol: f64) -> bool {
        self.asymmetry(tol).is_none()
    }

    /// Same game with `delta` added to every payoff.
    pub fn shifted(&self, delta: f64) -> Self {
        let payoffs = self
            .payoffs
            .iter()
            .map(|row| row.iter().map(|&(a, b)| (a + delta, b + delta)).collect())
            .collect();
        Self {
            labels_a: self.labels_a.clone(),
            labels_b: self.labels_b.clone(),
            payoffs,
        }
    }

    /// Serializes to the game JSON format, keys in fixed order and
    /// numbers in shortest round-trip form.
    pub fn to_json(&self) -> String {
        fn labels(ls: &[String]) -> String {
            let quoted: Vec<String> = ls
                .iter()
                .map(|l| serde_json::to_string(l).expect("string serialization"))
                .collect();
            format!("[{}]", quoted.join(","))
        }
        let rows: Vec<String> = self
            .payoffs
            .iter()
            .map(|row| {
                let cells: Vec<String> = row
                    .iter()
                    .map(|&(a, b)| format!("[{},{}]", fmt_shortest(a), fmt_shortest(b)))
                    .collect();
                format!("[{}]", cells.join(","))
            })
            .collect();
        format!(
            "{{\"labels_a\": {}, \"labels_b\": {}, \"payoffs\": [{}]}}",
            labels(&self.labels_a),
            labels(&self.labels_b),
            rows.join(",")
        )
    }
}

/// Shortest round-trip decimal; negative zero prints as `0`.
pub fn fmt_shortest(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    format!("{x}")
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HawkDoveParams {
    /// Resource value.
    pub v: f64,
    /// Injury cost.
    pub i: f64,
    /// Display cost.
    pub d: f64,
}

impl HawkDoveParams {
    pub const CANONICAL: Self = Self {
        v: 50.0,
        i: 100.0,
        d: 10.0,
    };

    pub fn new(v: f64, i: f64, d: f64) -> Self {
        Self { v, i, d }
    }

    pub fn is_canonical(&self) -> bool {
        *self == Self::CANONICAL
    }
}

impl Default for HawkDoveParams {
    fn default() -> Self {
        Self::CANONICAL
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MixedProfile {
    p: f64,
    q: f64,
}

impl MixedProfile {
    pub fn new(p: f64, q: f64) -> Result<Self> {
        check_probability("p", p)?;
        check_probability("q", q)?;
        Ok(Self { p, q })
    }

    /// Probability Alice plays her first strategy.
    pub fn p(&self) -> f64 {
        self.p
    }

    /// Probability Bob plays his first strategy.
    pub fn q(&self) -> f64 {
        self.q
    }
}

pub(crate) fn check_probability(name: &'static str, x: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::OutOfDomain {
            name,
            value: x,
            min: 0.0,
            max: 1.0,
        });
    }
    Ok(())
}

/// Classical Hawk-Dove bimatrix, strategies (H, D).
pub fn hawk_dove_game(params: HawkDoveParams) -> StrategicGame {
    let HawkDoveParams { v, i, d } = params;
    let hh = v / 2.0 - i / 2.0;
    let dd = v / 2.0 - d;
    StrategicGame::with_labels(&["H", "D"], vec![vec![(hh, hh), (v, 0.0)], vec![(0.0, v), (dd, dd)]])
        .expect("hawk-dove payoffs are finite for finite params")
}

/// Classical Prisoner's dilemma, strategies (C, D).
pub fn prisoners_dilemma_game() -> StrategicGame {
    StrategicGame::with_labels(
        &["C", "D"],
        vec![vec![(3.0, 3.0), (0.0, 5.0)], vec![(5.0, 0.0), (1.0, 1.0)]],
    )
    .expect("literal game")
}

/// Bilinear expected payoffs `(pi_A, pi_B)` of a 2x2 game under a mixed profile.
pub fn classical_mixed_payoff(game: &StrategicGame, profile: MixedProfile) -> Result<Payoff> {
    game.ensure_2x2()?;
    let wa = [profile.p, 1.0 - profile.p];
    let wb = [profile.q, 1.0 - profile.q];
    let mut out = (0.0, 0.0);
    for (i, x) in wa.iter().enumerate() {
        for (j, y) in wb.iter().enumerate() {
            let (a, b) = game.cell(i, j);
            out.0 += x * y * a;
            out.1 += x * y * b;
        }
    }
    Ok(out)
}

/// Parses and validates the game JSON format.
pub fn parse_game_file(text: &str) -> Result<StrategicGame> {
    let root: Value = serde_json::from_str(text).map_err(|e| Error::GameFormat {
        path: "$".into(),
        message: e.to_string(),
    })?;
    let obj = root.as_object().ok_or_else(|| format_err("$", "expected an object"))?;

    let labels_a = parse_labels(obj.get("labels_a"), "labels_a")?;
    let labels_b = parse_labels(obj.get("labels_b"), "labels_b")?;

    let rows = obj
        .get("payoffs")
        .ok_or_else(|| format_err("payoffs", "missing field"))?
        .as_array()
        .ok_or_else(|| format_err("payoffs", "expected an array"))?;
    if rows.len() != labels_a.len() {
        return Err(format_err(
            "payoffs",
            &format!("{} rows but labels_a has {} entries", rows.len(), labels_a.len()),
        ));
    }

    let mut payoffs = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        let row_path = format!("payoffs[{i}]");
        let cells = row
            .as_array()
            .ok_or_else(|| format_err(&row_path, "expected an array"))?;
        if cells.len() != labels_b.len() {
            return Err(format_err(
                &row_path,
                &format!("{} cells but labels_b has {} entries", cells.len(), labels_b.len()),
            ));
        }
        let mut parsed = Vec::with_capacity(cells.len());
        for (j, cell) in cells.iter().enumerate() {
            let cell_path = format!("payoffs[{i}][{j}]");
            let pair = cell
                .as_array()
                .filter(|p| p.len() == 2)
                .ok_or_else(|| format_err(&cell_path, "expected a pair [a, b]"))?;
            let num = |k: usize| {
                pair[k]
                    .as_f64()
                    .filter(|x| x.is_finite())
                    .ok_or_else(|| format_err(&format!("{cell_path}[{k}]"), "expected a finite number"))
            };
            parsed.push((num(0)?, num(1)?));
        }
        payoffs.push(parsed);
    }

    StrategicGame::new(labels_a, labels_b, payoffs)
}

fn parse_labels(value: Option<&Value>, field: &str) -> Result<Vec<String>> {
    let arr = value
        .ok_or_else(|| format_err(field, "missing field"))?
        .as_array()
        .ok_or_else(|| format_err(field, "expected an array of strings"))?;
    if arr.is_empty() {
        return Err(format_err(field, "strategy list is empty"));
    }
    arr.iter()
        .enumerate()
        .map(|(k, v)| {
            v.as_str()
                .map(str::to_owned)
                .ok_or_else(|| format_err(&format!("{field}[{k}]"), "expected a string"))
        })
        .collect()
}

fn format_err(path: &str, message: &str) -> Error {
    Error::GameFormat {
        path: path.to_string(),
        message: message.to_string(),
    }
}
