//! Homotopy moves and their legality certificates.
//!
//! The primitive steps are `Contract` (remove a vertex whose unit sphere is
//! contractible) and `Expand` (attach a new vertex to a contractible induced
//! subgraph). `EdgeRemove` and `EdgeRefine` are macros that unfold into
//! primitives; their certificates record which construction applies.

use serde::{Deserialize, Serialize};

use super::contract::Oracle;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::Label;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Move {
    /// Remove `v`.
    Contract { v: Label },
    /// Add a vertex labelled `v` joined to the vertices in `over`.
    Expand { over: Vec<Label>, v: Label },
    /// Delete the edge `ab`.
    EdgeRemove { a: Label, b: Label },
    /// Add `e` joined to `a`, `b` and their common neighbours, then delete
    /// the edge `ab`.
    EdgeRefine { a: Label, b: Label, e: Label },
}

impl Move {
    pub fn kind(&self) -> &'static str {
        match self {
            Move::Contract { .. } => "Contract",
            Move::Expand { .. } => "Expand",
            Move::EdgeRemove { .. } => "EdgeRemove",
            Move::EdgeRefine { .. } => "EdgeRefine",
        }
    }
}

/// How an edge `ab` is removed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "via")]
pub enum EdgeCertificate {
    /// `S(pivot)` and `S(pivot) - other` are both contractible: contract the
    /// pivot, then attach it again over `S(pivot) - other`.
    Pivot { pivot: Label, sphere: Vec<Label>, reduced: Vec<Label> },
    /// `S(a) ∩ S(b)` is contractible: attach a twin `a'` over `B(a) - b`,
    /// contract `a`, and rename `a'` to `a`.
    Twin { a: Label, intersection: Vec<Label> },
}

/// Witness for a move: every listed vertex set induces a contractible graph
/// at the moment it is used.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum Certificate {
    /// The unit sphere of the contracted vertex.
    UnitSphere { vertices: Vec<Label> },
    /// The attaching set of an expansion.
    Attachment { vertices: Vec<Label> },
    Edge(EdgeCertificate),
    /// Attachment of the refining vertex, then the edge removal.
    Refine { attachment: Vec<Label>, removal: EdgeCertificate },
}

/// A primitive step after macro expansion. `Rename` only occurs inside the
/// twin construction and does not change the graph up to isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Primitive {
    Contract { v: Label },
    Expand { over: Vec<Label>, v: Label },
    Rename { from: Label, to: Label },
}

fn sorted(mut v: Vec<Label>) -> Vec<Label> {
    v.sort_unstable();
    v
}

fn sphere_labels(g: &Graph, v: Label) -> Result<Vec<Label>> {
    let i = g.require(v)?;
    Ok(sorted(g.neighbors(i).ones().map(|j| g.label(j)).collect()))
}

fn illegal(msg: impl Into<String>) -> Error {
    Error::IllegalMove(msg.into())
}

fn contractible(oracle: &mut Oracle<'_>, labels: &[Label]) -> bool {
    let set = oracle.subset(labels);
    set.count_ones(..) == labels.len() && oracle.contractible(&set)
}

/// Finds a certificate for removing the edge `ab`, if one exists.
pub fn edge_certificate(g: &Graph, a: Label, b: Label) -> Result<EdgeCertificate> {
    let (i, j) = (g.require(a)?, g.require(b)?);
    if !g.has_edge(i, j) {
        return Err(illegal(format!("{a} and {b} are not adjacent")));
    }
    let mut oracle = Oracle::new(g);
    for (p, q) in [(a, b), (b, a)] {
        let sphere = sphere_labels(g, p)?;
        let reduced: Vec<Label> = sphere.iter().copied().filter(|&x| x != q).collect();
        if contractible(&mut oracle, &sphere) && contractible(&mut oracle, &reduced) {
            return Ok(EdgeCertificate::Pivot { pivot: p, sphere, reduced });
        }
    }
    let sa = sphere_labels(g, a)?;
    let sb = sphere_labels(g, b)?;
    let intersection: Vec<Label> = sa.into_iter().filter(|x| sb.contains(x)).collect();
    if contractible(&mut oracle, &intersection) {
        return Ok(EdgeCertificate::Twin { a, intersection });
    }
    Err(illegal(format!("no certificate removes edge ({a},{b}): S({a}) ∩ S({b}) is not contractible")))
}

/// The primitives an edge removal unfolds to, given its certificate.
fn edge_primitives(g: &Graph, a: Label, b: Label, cert: &EdgeCertificate) -> Result<Vec<Primitive>> {
    Ok(match cert {
        EdgeCertificate::Pivot { pivot, reduced, .. } => {
            vec![Primitive::Contract { v: *pivot }, Primitive::Expand { over: reduced.clone(), v: *pivot }]
        }
        EdgeCertificate::Twin { a: keep, .. } => {
            let other = if *keep == a { b } else { a };
            let twin = g.fresh_label();
            let mut ball = sphere_labels(g, *keep)?;
            ball.retain(|&x| x != other);
            ball.push(*keep);
            vec![
                Primitive::Expand { over: sorted(ball), v: twin },
                Primitive::Contract { v: *keep },
                Primitive::Rename { from: twin, to: *keep },
            ]
        }
    })
}

/// Applies a primitive, checking its legality.
pub fn apply_primitive(g: &Graph, p: &Primitive) -> Result<Graph> {
    match p {
        Primitive::Contract { v } => {
            let sphere = sphere_labels(g, *v)?;
            if !contractible(&mut Oracle::new(g), &sphere) {
                return Err(illegal(format!("S({v}) is not contractible")));
            }
            g.remove_vertex(*v)
        }
        Primitive::Expand { over, v } => {
            if g.index_of(*v).is_some() {
                return Err(illegal(format!("label {v} already in use")));
            }
            for &w in over {
                g.require(w)?;
            }
            if !contractible(&mut Oracle::new(g), &sorted(over.clone())) {
                return Err(illegal(format!("attaching set {over:?} is not contractible")));
            }
            g.add_vertex(*v, over)
        }
        Primitive::Rename { from, to } => {
            let mut h = g.clone();
            h.relabel_vertex(*from, *to)?;
            Ok(h)
        }
    }
}

/// Derives the certificate for `m` on `g`, or explains why `m` is illegal.
pub fn certify(g: &Graph, m: &Move) -> Result<Certificate> {
    match m {
        Move::Contract { v } => {
            let vertices = sphere_labels(g, *v)?;
            if !contractible(&mut Oracle::new(g), &vertices) {
                return Err(illegal(format!("S({v}) is not contractible")));
            }
            Ok(Certificate::UnitSphere { vertices })
        }
        Move::Expand { over, v } => {
            if g.index_of(*v).is_some() {
                return Err(illegal(format!("label {v} already in use")));
            }
            let vertices = sorted(over.clone());
            if vertices.windows(2).any(|w| w[0] == w[1]) {
                return Err(illegal("attaching set lists a vertex twice"));
            }
            for &w in &vertices {
                g.require(w)?;
            }
            if !contractible(&mut Oracle::new(g), &vertices) {
                return Err(illegal(format!("attaching set {vertices:?} is not contractible")));
            }
            Ok(Certificate::Attachment { vertices })
        }
        Move::EdgeRemove { a, b } => Ok(Certificate::Edge(edge_certificate(g, *a, *b)?)),
        Move::EdgeRefine { a, b, e } => {
            let attachment = refine_attachment(g, *a, *b)?;
            if g.index_of(*e).is_some() {
                return Err(illegal(format!("label {e} already in use")));
            }
            let h = g.add_vertex(*e, &attachment)?;
            let removal = edge_certificate(&h, *a, *b)?;
            Ok(Certificate::Refine { attachment, removal })
        }
    }
}

/// `{a, b} ∪ (S(a) ∩ S(b))`, a cone over `a`.
fn refine_attachment(g: &Graph, a: Label, b: Label) -> Result<Vec<Label>> {
    let (i, j) = (g.require(a)?, g.require(b)?);
    if !g.has_edge(i, j) {
        return Err(illegal(format!("{a} and {b} are not adjacent")));
    }
    let mut common: Vec<Label> = g.neighbors(i).intersection(g.neighbors(j)).map(|k| g.label(k)).collect();
    common.extend([a, b]);
    Ok(sorted(common))
}

/// Unfolds `m` with certificate `cert` into primitives. The certificate must
/// be exactly the one `certify` derives, so forged witnesses are rejected.
pub fn expand(g: &Graph, m: &Move, cert: &Certificate) -> Result<Vec<Primitive>> {
    let expected = certify(g, m)?;
    if *cert != expected {
        // a different but valid edge certificate is acceptable
        if !alternative_edge_certificate_holds(g, m, cert)? {
            return Err(illegal(format!("certificate {cert:?} does not witness {m:?}")));
        }
    }
    Ok(match (m, cert) {
        (Move::Contract { v }, _) => vec![Primitive::Contract { v: *v }],
        (Move::Expand { over, v }, _) => vec![Primitive::Expand { over: sorted(over.clone()), v: *v }],
        (Move::EdgeRemove { a, b }, Certificate::Edge(c)) => edge_primitives(g, *a, *b, c)?,
        (Move::EdgeRefine { a, b, e }, Certificate::Refine { attachment, removal }) => {
            let h = g.add_vertex(*e, attachment)?;
            let mut out = vec![Primitive::Expand { over: attachment.clone(), v: *e }];
            out.extend(edge_primitives(&h, *a, *b, removal)?);
            out
        }
        _ => return Err(illegal("certificate type does not match the move")),
    })
}

fn edge_certificate_valid(g: &Graph, a: Label, b: Label, c: &EdgeCertificate) -> Result<bool> {
    let mut oracle = Oracle::new(g);
    Ok(match c {
        EdgeCertificate::Pivot { pivot, sphere, reduced } => {
            let other = if *pivot == a { b } else if *pivot == b { a } else { return Ok(false) };
            let actual = sphere_labels(g, *pivot)?;
            let expect_reduced: Vec<Label> = actual.iter().copied().filter(|&x| x != other).collect();
            *sphere == actual
                && *reduced == expect_reduced
                && contractible(&mut oracle, sphere)
                && contractible(&mut oracle, reduced)
        }
        EdgeCertificate::Twin { a: keep, intersection } => {
            if *keep != a && *keep != b {
                return Ok(false);
            }
            let sa = sphere_labels(g, a)?;
            let sb = sphere_labels(g, b)?;
            let actual: Vec<Label> = sa.into_iter().filter(|x| sb.contains(x)).collect();
            *intersection == actual && contractible(&mut oracle, intersection)
        }
    })
}

fn alternative_edge_certificate_holds(g: &Graph, m: &Move, cert: &Certificate) -> Result<bool> {
    match (m, cert) {
        (Move::EdgeRemove { a, b }, Certificate::Edge(c)) => edge_certificate_valid(g, *a, *b, c),
        (Move::EdgeRefine { a, b, e }, Certificate::Refine { attachment, removal }) => {
            if *attachment != refine_attachment(g, *a, *b)? {
                return Ok(false);
            }
            let h = g.add_vertex(*e, attachment)?;
            edge_certificate_valid(&h, *a, *b, removal)
        }
        _ => Ok(false),
    }
}

/// Applies `m` to `g`, returning the new graph and the certificate used.
pub fn apply_move(g: &Graph, m: &Move) -> Result<(Graph, Certificate)> {
    let cert = certify(g, m)?;
    let h = apply_certified(g, m, &cert)?;
    Ok((h, cert))
}

/// Applies `m` after re-checking `cert` and every primitive it unfolds to.
pub fn apply_certified(g: &Graph, m: &Move, cert: &Certificate) -> Result<Graph> {
    let mut h = g.clone();
    for p in expand(g, m, cert)? {
        h = apply_primitive(&h, &p)?;
    }
    Ok(h)
}
