//! Recorded sequences of moves and their verification.

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use super::moves::{apply_certified, apply_move, expand, Certificate, Move};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Clique budget for the Euler characteristic check during replay.
pub const REPLAY_CLIQUE_LIMIT: usize = 200_000;

/// One move with the certificate that made it legal. Serialized as
/// `{kind, args, certificate}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "StepRepr", try_from = "StepRepr")]
pub struct Step {
    pub mv: Move,
    pub certificate: Certificate,
}

#[derive(Serialize, Deserialize)]
struct StepRepr {
    kind: String,
    args: Map<String, Value>,
    certificate: Certificate,
}

impl From<Step> for StepRepr {
    fn from(s: Step) -> Self {
        let mut args = match serde_json::to_value(&s.mv) {
            Ok(Value::Object(m)) => m,
            _ => Map::new(),
        };
        args.remove("kind");
        StepRepr { kind: s.mv.kind().to_string(), args, certificate: s.certificate }
    }
}

impl TryFrom<StepRepr> for Step {
    type Error = String;
    fn try_from(r: StepRepr) -> std::result::Result<Self, String> {
        let mut args = r.args;
        args.insert("kind".into(), Value::String(r.kind));
        let mv = serde_json::from_value(Value::Object(args)).map_err(|e| e.to_string())?;
        Ok(Step { mv, certificate: r.certificate })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomotopyTrace {
    pub start: Graph,
    pub moves: Vec<Step>,
    pub end: Graph,
}

/// Outcome of a successful replay.
#[derive(Clone, Debug)]
pub struct Replay {
    /// The graph before every move, followed by the final graph.
    pub states: Vec<Graph>,
    /// Number of primitive contractions and expansions.
    pub primitive_steps: usize,
    /// The common Euler characteristic, when every state was small enough to
    /// count cliques.
    pub euler: Option<i64>,
}

impl HomotopyTrace {
    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// Re-applies every move from `start`, re-deriving each certificate and
    /// each primitive, and checks that the Euler characteristic is constant
    /// and that the result is `end`.
    pub fn replay(&self) -> Result<Replay> {
        let mut states = vec![self.start.clone()];
        let mut g = self.start.clone();
        let mut primitive_steps = 0;
        let mut euler = euler_of(&g);
        let mut all_counted = euler.is_some();
        for (k, step) in self.moves.iter().enumerate() {
            primitive_steps += expand(&g, &step.mv, &step.certificate)?
                .iter()
                .filter(|p| !matches!(p, super::moves::Primitive::Rename { .. }))
                .count();
            g = apply_certified(&g, &step.mv, &step.certificate)
                .map_err(|e| Error::IllegalMove(format!("move {k}: {e}")))?;
            match (euler, euler_of(&g)) {
                (Some(a), Some(b)) if a != b => {
                    return Err(Error::IllegalMove(format!("move {k} changed the Euler characteristic from {a} to {b}")))
                }
                (None, Some(b)) => euler = Some(b),
                (_, None) => all_counted = false,
                _ => {}
            }
            states.push(g.clone());
        }
        if !g.same_labeled(&self.end) {
            return Err(Error::IllegalMove("replay does not end at the recorded graph".into()));
        }
        Ok(Replay { states, primitive_steps, euler: euler.filter(|_| all_counted) })
    }
}

fn euler_of(g: &Graph) -> Option<i64> {
    g.clique_f_vector(REPLAY_CLIQUE_LIMIT).ok().map(|f| f.euler_characteristic())
}

/// Builds a trace move by move, certifying each one.
#[derive(Clone, Debug)]
pub struct TraceBuilder {
    start: Graph,
    current: Graph,
    moves: Vec<Step>,
}

impl TraceBuilder {
    pub fn new(start: Graph) -> Self {
        TraceBuilder { current: start.clone(), start, moves: Vec::new() }
    }

    pub fn current(&self) -> &Graph {
        &self.current
    }

    pub fn moves(&self) -> &[Step] {
        &self.moves
    }

    pub fn push(&mut self, mv: Move) -> Result<&Graph> {
        let (next, certificate) = apply_move(&self.current, &mv)?;
        self.current = next;
        self.moves.push(Step { mv, certificate });
        Ok(&self.current)
    }

    /// Drops the last move, returning it.
    pub fn undo(&mut self) -> Option<Step> {
        let step = self.moves.pop()?;
        let mut g = self.start.clone();
        for s in &self.moves {
            g = apply_certified(&g, &s.mv, &s.certificate).expect("recorded moves stay legal");
        }
        self.current = g;
        Some(step)
    }

    pub fn finish(self) -> HomotopyTrace {
        HomotopyTrace { start: self.start, moves: self.moves, end: self.current }
    }
}
