//! The Hatcher-Oertel edgepath algorithm for `P(1/r, 1/s, 1/t)`.
//!
//! Each tangle `1/p` has two non-constant candidate edgepaths: the short
//! path `⟨1/p⟩ -- ⟨0⟩` and the long path through `⟨1/(p∓1)⟩, …` down to
//! `⟨±1⟩`. An edgepath system picks one path per tangle and an endpoint on
//! some edge of each; the endpoints must share their horizontal coordinate
//! and have vertical coordinates summing to zero.

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::rational::serde_str;
use crate::arith::{int, rat, Rational};
use crate::jones::PretzelKnot;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexKind {
    /// `⟨p/q⟩`
    Interior,
    /// `⟨p/q⟩°`
    Circular,
    /// `⟨1/0⟩`
    Infinity,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vertex {
    pub kind: VertexKind,
    pub slope: Rational,
}

impl Vertex {
    pub fn interior(slope: Rational) -> Self {
        Self {
            kind: VertexKind::Interior,
            slope,
        }
    }

    /// Projective `(a, b, c)` weights with `a = 1`, for interior vertices.
    pub fn abc(&self) -> Option<[Rational; 3]> {
        let (p, q) = (
            int(self.slope.numer().to_i64()?),
            int(self.slope.denom().to_i64()?),
        );
        match self.kind {
            VertexKind::Interior => Some([int(1), q - int(1), p]),
            VertexKind::Circular => None,
            VertexKind::Infinity => None,
        }
    }

    pub fn horizontal(&self) -> Rational {
        match self.kind {
            VertexKind::Interior => {
                let q = int(self.slope.denom().to_i64().unwrap());
                (&q - int(1)) / q
            }
            VertexKind::Circular => int(1),
            VertexKind::Infinity => int(-1),
        }
    }

    pub fn vertical(&self) -> Rational {
        match self.kind {
            VertexKind::Infinity => int(0),
            _ => self.slope.clone(),
        }
    }

    fn denom(&self) -> i64 {
        self.slope.denom().to_i64().unwrap()
    }
}

impl std::fmt::Display for Vertex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.kind {
            VertexKind::Interior => write!(f, "<{}>", self.slope),
            VertexKind::Circular => write!(f, "<{}>°", self.slope),
            VertexKind::Infinity => write!(f, "<1/0>"),
        }
    }
}

/// A point of the edgepath complex in projective `(a, b, c)` weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgepathPoint {
    pub abc: [Rational; 3],
}

impl EdgepathPoint {
    pub fn horizontal(&self) -> Rational {
        &self.abc[1] / (&self.abc[0] + &self.abc[1])
    }

    pub fn vertical(&self) -> Rational {
        &self.abc[2] / (&self.abc[0] + &self.abc[1])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PathKind {
    /// `⟨1/p⟩ -- ⟨0⟩`
    Short,
    /// `⟨1/p⟩ -- ⟨1/(p∓1)⟩ -- ⋯ -- ⟨±1⟩`
    Long,
}

/// A candidate edgepath, listed from its starting vertex leftward.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edgepath {
    pub tangle: i64,
    pub kind: PathKind,
    pub vertices: Vec<Vertex>,
}

impl Edgepath {
    pub fn edges(&self) -> usize {
        self.vertices.len() - 1
    }
}

impl std::fmt::Display for Edgepath {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.vertices.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(" -- "))
    }
}

/// The two non-constant candidate edgepaths of the tangle `1/p`, short first.
/// For `|p| = 1` the long path degenerates to a vertex and is omitted.
pub fn candidate_edgepaths(p: i64) -> Vec<Edgepath> {
    assert!(p != 0, "tangle 1/0 has no candidate edgepaths");
    let v = |num: i64, den: i64| Vertex::interior(rat(num, den));
    let sign = p.signum();
    let mut out = vec![Edgepath {
        tangle: p,
        kind: PathKind::Short,
        vertices: vec![v(1, p), v(0, 1)],
    }];
    if p.abs() >= 2 {
        let vertices = (1..=p.abs()).rev().map(|d| v(sign, d)).collect();
        out.push(Edgepath {
            tangle: p,
            kind: PathKind::Long,
            vertices,
        });
    }
    out
}

/// Three edgepaths with endpoints `λ_i⟨P_i⟩ + (1 − λ_i)⟨R_i⟩` on their final
/// edges `P_i -- R_i`, `0 ≤ λ_i < 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgepathSystem {
    pub paths: [Edgepath; 3],
    /// Index of the final edge of each path.
    pub final_edges: [usize; 3],
    pub lambdas: [Rational; 3],
    /// Sheets of the minimal representative: the lcm of the λ denominators.
    pub m: i64,
    /// `k_i = λ_i m`.
    pub ks: [i64; 3],
}

fn edge_ends(path: &Edgepath, e: usize) -> ([Rational; 3], [Rational; 3]) {
    let p = path.vertices[e].abc().expect("interior vertex");
    let r = path.vertices[e + 1].abc().expect("interior vertex");
    (p, r)
}

fn det3(m: &[[Rational; 3]; 3]) -> Rational {
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
        - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

impl EdgepathSystem {
    fn new(paths: [Edgepath; 3], final_edges: [usize; 3], lambdas: [Rational; 3]) -> Self {
        let m = lambdas
            .iter()
            .fold(1i64, |acc, l| acc.lcm(&l.denom().to_i64().unwrap()));
        let ks = [0, 1, 2].map(|i| (&lambdas[i] * int(m)).to_integer().to_i64().unwrap());
        Self {
            paths,
            final_edges,
            lambdas,
            m,
            ks,
        }
    }

    pub fn endpoint(&self, i: usize) -> EdgepathPoint {
        let (p, r) = edge_ends(&self.paths[i], self.final_edges[i]);
        let l = &self.lambdas[i];
        let abc = [0, 1, 2].map(|j| &r[j] + l * (&p[j] - &r[j]));
        EdgepathPoint { abc }
    }

    pub fn kinds(&self) -> [PathKind; 3] {
        [0, 1, 2].map(|i| self.paths[i].kind)
    }

    /// `q_P − q_R` of each final edge `P -- R`.
    pub fn r_values(&self) -> [i64; 3] {
        [0, 1, 2].map(|i| {
            let e = self.final_edges[i];
            let vs = &self.paths[i].vertices;
            vs[e].denom() - vs[e + 1].denom()
        })
    }

    pub fn is_seifert_reference(&self) -> bool {
        self.kinds() == [PathKind::Short; 3] && self.lambdas.iter().all(Zero::is_zero)
    }
}

/// The orientable spanning surface: every path short, ending at `⟨0⟩`.
pub fn seifert_reference(k: &PretzelKnot) -> EdgepathSystem {
    let paths = [k.r, k.s, k.t].map(|p| candidate_edgepaths(p).swap_remove(0));
    EdgepathSystem::new(paths, [0; 3], [int(0), int(0), int(0)])
}

/// All systems for one choice of paths: for each combination of final edges
/// the two E4 conditions and the equal-horizontal condition form a 3×3
/// linear system in the λ_i; nonsingular systems with every `λ_i ∈ [0, 1)`
/// are returned. Singular combinations carry no isolated solution and are
/// skipped.
pub fn solve_system(choice: &[Edgepath; 3]) -> Vec<EdgepathSystem> {
    let mut out = Vec::new();
    for e0 in 0..choice[0].edges() {
        for e1 in 0..choice[1].edges() {
            for e2 in 0..choice[2].edges() {
                let fe = [e0, e1, e2];
                if let Some(lambdas) = solve_edges(choice, fe) {
                    out.push(EdgepathSystem::new(choice.clone(), fe, lambdas));
                }
            }
        }
    }
    out
}

fn solve_edges(choice: &[Edgepath; 3], fe: [usize; 3]) -> Option<[Rational; 3]> {
    // b_i = β_i + λ_i δ_i and c_i = γ_i + λ_i ε_i along each final edge.
    let ends = [0, 1, 2].map(|i| edge_ends(&choice[i], fe[i]));
    let beta = ends.clone().map(|(_, r)| r[1].clone());
    let delta = ends.clone().map(|(p, r)| &p[1] - &r[1]);
    let gamma = ends.clone().map(|(_, r)| r[2].clone());
    let eps = ends.map(|(p, r)| &p[2] - &r[2]);
    let zero = int(0);
    let a = [
        [delta[0].clone(), -&delta[1], zero.clone()],
        [zero.clone(), delta[1].clone(), -&delta[2]],
        eps.clone(),
    ];
    let rhs = [
        &beta[1] - &beta[0],
        &beta[2] - &beta[1],
        -(&gamma[0] + &gamma[1] + &gamma[2]),
    ];
    let d = det3(&a);
    if d.is_zero() {
        return None;
    }
    let lambdas = [0, 1, 2].map(|col| {
        let mut ac = a.clone();
        for row in 0..3 {
            ac[row][col] = rhs[row].clone();
        }
        det3(&ac) / &d
    });
    let in_range = lambdas.iter().all(|l| !l.is_negative() && *l < int(1));
    in_range.then_some(lambdas)
}

/// `τ = 2(e₋ − e₊)`, full edges weighted 1 and each final edge `1 − λ`.
pub fn twist_number(sys: &EdgepathSystem) -> Rational {
    let mut tau = int(0);
    for i in 0..3 {
        let vs = &sys.paths[i].vertices;
        for e in 0..=sys.final_edges[i] {
            let w = if e == sys.final_edges[i] {
                int(1) - &sys.lambdas[i]
            } else {
                int(1)
            };
            if vs[e + 1].slope < vs[e].slope {
                tau += w;
            } else {
                tau -= w;
            }
        }
    }
    tau * int(2)
}

pub fn boundary_slope(sys: &EdgepathSystem, seifert: &EdgepathSystem) -> Rational {
    twist_number(sys) - twist_number(seifert)
}

/// `χ(S)` of the minimal representative: `2m` base disks per tangle, `m`
/// saddles per full edge, `m − k` for each final edge, `−(2a + b)` for each of
/// the two gluings between neighbouring balls and `+b` for closing up, with
/// `(a, b)` the common endpoint weights scaled to `m` sheets.
pub fn euler_characteristic(sys: &EdgepathSystem) -> Rational {
    let m = int(sys.m);
    let full: usize = sys.final_edges.iter().sum();
    let fractional: i64 = sys.ks.iter().map(|k| sys.m - k).sum();
    let end = sys.endpoint(0);
    let a = &m * &end.abc[0];
    let b = &m * &end.abc[1];
    int(6) * &m - &m * int(full as i64) - int(fractional) - int(2) * (int(2) * a + &b) + b
}

pub fn euler_ratio(sys: &EdgepathSystem) -> Rational {
    euler_characteristic(sys) / int(sys.m)
}

/// No cyclic arrangement of the r-values has the form `(0, *, *)` or
/// `(1, 1, *)`.
pub fn r_cycle_incompressible(r: [i64; 3]) -> bool {
    !r.contains(&0) && r.iter().filter(|&&x| x == 1).count() < 2
}

pub fn incompressibility_check(sys: &EdgepathSystem) -> bool {
    r_cycle_incompressible(sys.r_values())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceReport {
    #[serde(with = "serde_str")]
    pub slope: Rational,
    #[serde(with = "serde_str")]
    pub chi_over_m: Rational,
    #[serde(with = "serde_str")]
    pub euler_characteristic: Rational,
    pub sheets: i64,
    pub boundary_components: i64,
    pub r_cycle: [i64; 3],
    pub incompressible: bool,
    pub is_seifert_reference: bool,
    /// The path shape is one whose Euler characteristic bookkeeping has been
    /// checked against known closed forms.
    pub euler_validated: bool,
    pub paths: [PathKind; 3],
    #[serde(with = "serde_str::vec")]
    pub lambdas: Vec<Rational>,
    pub edgepaths: Vec<String>,
}

fn report(sys: &EdgepathSystem, seifert: &EdgepathSystem) -> SurfaceReport {
    let slope = boundary_slope(sys, seifert);
    let denom = slope.denom().to_i64().unwrap();
    debug_assert!(sys.m % denom == 0);
    let kinds = sys.kinds();
    let validated = sys.is_seifert_reference()
        || kinds == [PathKind::Long, PathKind::Short, PathKind::Short]
            && sys.paths[0].tangle < 0
            && sys.paths[1].tangle > 0
            && sys.paths[2].tangle > 0;
    let edgepaths = (0..3)
        .map(|i| {
            let path = &sys.paths[i];
            let e = sys.final_edges[i];
            let l = &sys.lambdas[i];
            let head: Vec<String> = path.vertices[..=e]
                .iter()
                .map(ToString::to_string)
                .collect();
            format!(
                "{} -- ({}){} + ({}){}",
                head.join(" -- "),
                l,
                path.vertices[e],
                int(1) - l,
                path.vertices[e + 1]
            )
        })
        .collect();
    SurfaceReport {
        chi_over_m: euler_ratio(sys),
        euler_characteristic: euler_characteristic(sys),
        sheets: sys.m,
        boundary_components: sys.m / denom,
        r_cycle: sys.r_values(),
        incompressible: incompressibility_check(sys),
        is_seifert_reference: sys.is_seifert_reference(),
        euler_validated: validated,
        paths: kinds,
        lambdas: sys.lambdas.to_vec(),
        edgepaths,
        slope,
    }
}

/// Every edgepath system over the `2³` path choices, the Seifert reference
/// first.
pub fn enumerate_systems(k: &PretzelKnot) -> Vec<EdgepathSystem> {
    let seifert = seifert_reference(k);
    let mut out = vec![seifert.clone()];
    let [pr, ps, pt] = [k.r, k.s, k.t].map(candidate_edgepaths);
    for a in &pr {
        for b in &ps {
            for c in &pt {
                let choice = [a.clone(), b.clone(), c.clone()];
                out.extend(solve_system(&choice).into_iter().filter(|s| *s != seifert));
            }
        }
    }
    out
}

pub fn enumerate_surfaces(k: &PretzelKnot) -> Vec<SurfaceReport> {
    let systems = enumerate_systems(k);
    let seifert = &systems[0];
    systems.iter().map(|s| report(s, seifert)).collect()
}
