//! The profile report behind `profile` and `example211 --table`: homological
//! dimensions, the dense torsion data and one row per indecomposable.

use std::fmt::Write as _;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::PathAlgebra;
use crate::error::Result;
use crate::family::Indecomposable;
use crate::homolog::{
    homological_profile, id, minimal_resolution, pd, Dimension, Direction, Gorenstein, HigherAg,
    HomologicalProfile,
};
use crate::module::{is_injective, is_projective, regular};
use crate::quotient::is_closed;
use crate::theorems::dense_topology;
use crate::topology::{dense_primes, DensePrime};

/// Version tag of the JSON layout.
pub const PROFILE_SCHEMA: &str = "quiverlab.profile/1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorsionSummary {
    /// Socle support of `E(Γ)`, 1-based.
    pub support: Vec<usize>,
    pub dim_j0: usize,
    /// Present when the algebra is `n`-minimal Auslander-Gorenstein for some `n`.
    pub dense_primes: Option<Vec<DensePrime>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub name: String,
    pub dim_vector: Vec<usize>,
    pub pd: Dimension,
    pub id: Dimension,
    /// Present over Iwanaga-Gorenstein algebras.
    pub gpd: Option<usize>,
    pub torsion: bool,
    pub torsion_free: bool,
    pub closed: bool,
    pub projective_injective: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileReport {
    pub schema: String,
    pub algebra: String,
    pub field: String,
    pub profile: HomologicalProfile,
    pub torsion: TorsionSummary,
    /// Socle labels (1-based) of the terms of the minimal injective resolution of `Γ`.
    pub injective_resolution: Vec<Vec<usize>>,
    pub rows: Vec<TableRow>,
    /// Closed rows that are projective and injective.
    pub closed_injectives: Vec<String>,
}

impl ProfileReport {
    /// `closed ⇒ torsion-free` and `torsion ⇒ not closed` unless zero.
    pub fn is_consistent(&self) -> bool {
        self.rows.iter().all(|r| {
            let nonzero = r.dim_vector.iter().any(|&d| d > 0);
            (!r.closed || r.torsion_free) && !(nonzero && r.torsion && r.closed)
        })
    }

    pub fn row(&self, name: &str) -> Option<&TableRow> {
        self.rows.iter().find(|r| r.name == name)
    }
}

pub fn emit_table(
    algebra: &Arc<PathAlgebra>,
    label: &str,
    sample: &[Indecomposable],
    cap: usize,
) -> Result<ProfileReport> {
    let profile = homological_profile(algebra, cap);
    let topology = dense_topology(algebra)?;
    let pair = topology.pair();
    let primes = match profile.n_min_ag {
        Some(range) => Some(dense_primes(&topology, &HigherAg::certify(algebra, range.min, cap)?)?),
        None => None,
    };
    let gorenstein = Gorenstein::certify(algebra, cap).ok();
    let rows = sample
        .par_iter()
        .map(|ind| {
            let m = &ind.module;
            Ok(TableRow {
                name: ind.name.clone(),
                dim_vector: m.dims().to_vec(),
                pd: pd(m, cap),
                id: id(m, cap),
                gpd: gorenstein.as_ref().map(|g| g.gpd(m)).transpose()?,
                torsion: pair.is_torsion(m),
                torsion_free: pair.is_torsionfree(m),
                closed: is_closed(&topology, m)?.closed,
                projective_injective: is_projective(m) && is_injective(m),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let closed_injectives = rows
        .iter()
        .filter(|r| r.closed && r.projective_injective)
        .map(|r| r.name.clone())
        .collect();
    let res = minimal_resolution(&regular(algebra), Direction::Injective, cap);
    Ok(ProfileReport {
        schema: PROFILE_SCHEMA.to_string(),
        algebra: label.to_string(),
        field: algebra.field().to_string(),
        torsion: TorsionSummary {
            support: pair.support().iter().map(|v| v + 1).collect(),
            dim_j0: topology.j0().dim(),
            dense_primes: primes,
        },
        injective_resolution: res
            .labels
            .iter()
            .map(|ls| ls.iter().map(|v| v + 1).collect())
            .collect(),
        profile,
        rows,
        closed_injectives,
    })
}

fn opt_range(r: &Option<crate::homolog::NRange>) -> String {
    match r {
        None => "none".into(),
        Some(r) if r.max == Some(r.min) => r.min.to_string(),
        Some(r) => match r.max {
            Some(m) => format!("{}..={m}", r.min),
            None => format!("{}..", r.min),
        },
    }
}

fn labels(ls: &[usize], prefix: &str) -> String {
    if ls.is_empty() {
        return "0".into();
    }
    ls.iter().map(|v| format!("{prefix}({v})")).collect::<Vec<_>>().join("+")
}

pub fn render_text(r: &ProfileReport) -> String {
    let p = &r.profile;
    let mut s = String::new();
    let _ = writeln!(s, "algebra {} over {} (dim {}, {} vertices)", r.algebra, r.field, p.dim, p.vertices);
    let _ = writeln!(
        s,
        "gldim {}  id_left {}  id_right {}  domdim {}  ggldim {}",
        p.gldim, p.id_left, p.id_right, p.domdim, p.ggldim
    );
    let _ = writeln!(
        s,
        "iwanaga-gorenstein {}  self-injective {}  n-auslander {}  n-min-ag {}",
        p.iwanaga_gorenstein,
        p.self_injective,
        opt_range(&p.n_auslander),
        opt_range(&p.n_min_ag)
    );
    let _ = writeln!(s, "Q = {}", labels(&p.q_summand, "I"));
    if !p.undecided.is_empty() {
        let _ = writeln!(s, "undecided at cap: {}", p.undecided.join(", "));
    }
    let res: Vec<String> = r.injective_resolution.iter().map(|t| labels(t, "I")).collect();
    let _ = writeln!(s, "0 -> Γ -> {} -> 0", res.join(" -> "));
    let _ = writeln!(s, "V_E = {:?}  dim J0 = {}", r.torsion.support, r.torsion.dim_j0);
    if let Some(primes) = &r.torsion.dense_primes {
        for d in primes {
            let _ = writeln!(s, "  p_{}: dense {}  gpd(Γ/p) {}", d.vertex, d.dense, d.gpd);
        }
    }
    if !r.rows.is_empty() {
        let width = r.rows.iter().map(|x| x.name.len()).max().unwrap_or(4).max(6);
        let _ = writeln!(
            s,
            "{:<width$}  {:<12} {:>4} {:>4} {:>4}  torsion  closed",
            "module", "dims", "pd", "id", "gpd"
        );
        for row in &r.rows {
            let dims = format!("{:?}", row.dim_vector).replace(' ', "");
            let gpd = row.gpd.map_or("-".into(), |g| g.to_string());
            let _ = writeln!(
                s,
                "{:<width$}  {:<12} {:>4} {:>4} {:>4}  {:<7}  {}",
                row.name, dims, row.pd.to_string(), row.id.to_string(), gpd, row.torsion, row.closed
            );
        }
        let _ = writeln!(s, "closed injectives: {}", r.closed_injectives.join(", "));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{example211, nakayama_indecomposables};
    use crate::field::Field;
    use crate::homolog::DEFAULT_CAP;

    #[test]
    fn table_for_n1_round_trips() {
        let a = Arc::new(example211(1, Field::Rational).unwrap());
        let ind = nakayama_indecomposables(&a).unwrap();
        let r = emit_table(&a, "example211:1", &ind, DEFAULT_CAP).unwrap();
        assert!(r.is_consistent());
        assert_eq!(r.row("S(1)").unwrap().pd, Dimension::Finite(2));
        assert_eq!(r.row("P(3)").unwrap().id, Dimension::Finite(2));
        assert_eq!(r.injective_resolution, vec![vec![2, 3, 3], vec![2], vec![1]]);
        let json = serde_json::to_string(&r).unwrap();
        let back: ProfileReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
        assert!(render_text(&r).contains("closed injectives: P(1), P(2)"));
    }
}
