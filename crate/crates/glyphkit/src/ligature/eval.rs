//! The recursive pair function induced by a rewrite program, and the loop
//! checker built on it.
//!
//! For a pair `(a, w)` the function yields the letter standing immediately
//! left of the cursor at the first moment rewriting carries the cursor past
//! the material derived from `w`. Reading that off the operation table:
//!
//! - no rule:            `f(a, w) = w`
//! - `=:` with `z`:      `f(a, w) = z`
//! - `=:|`:              `f(a, w) = f(z, w)`
//! - `=:|>`:             `f(a, w) = w`
//! - `|=:`:              `f(a, w) = f(a, z)`
//! - `|=:>`:             `f(a, w) = z`
//! - `|=:|`:             `f(a, w) = f(f(a, z), w)`
//! - `|=:|>`:            `f(a, w) = f(z, w)`
//! - `|=:|>>`:           `f(a, w) = w`
//!
//! The function is total exactly when no rewrite can loop forever, so loop
//! checking reduces to evaluating it everywhere. The evaluator is a
//! depth-first search over pairs with a memo table and in-progress marks:
//! re-entering an in-progress pair proves a cycle, and memoization guarantees
//! each distinct pair is expanded at most once per checker run — the whole
//! check is linear in the number of pairs reached.

use std::collections::{BTreeMap, HashMap};

use serde_json::json;

use crate::letter::Letter;
use crate::ligature::program::{LigOp, LigProgram};

type Pair = (Letter, Letter);

/// A dependency cycle among pairs: the segment of the evaluation stack from
/// the re-entered pair up to the pair that re-entered it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cycle {
    pub pairs: Vec<Pair>,
}

/// Result of evaluating the pair function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FValue {
    Defined(Letter),
    /// The pair lies on, or depends on, the reported cycle.
    Undefined(Cycle),
}

impl FValue {
    pub fn is_defined(&self) -> bool {
        matches!(self, FValue::Defined(_))
    }

    pub fn letter(&self) -> Option<Letter> {
        match self {
            FValue::Defined(l) => Some(*l),
            FValue::Undefined(_) => None,
        }
    }
}

/// Work counters for one evaluator run.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub struct EvalStats {
    /// Pairs actually expanded (pushed on the evaluation stack).
    pub evaluated: usize,
    /// Distinct pairs encountered, i.e. memo table entries.
    pub distinct_pairs: usize,
}

enum Slot {
    InProgress,
    Done(FValue),
}

enum Stage {
    Start,
    /// Waiting for the inner `f(a, z)` of a keep-both rule; `omega` is the
    /// outer right-hand letter still to be combined.
    AwaitInner {
        omega: Letter,
    },
    /// Waiting for a value that becomes this frame's own value.
    AwaitTail,
}

struct Frame {
    pair: Pair,
    stage: Stage,
}

enum Expansion {
    Value(Letter),
    Tail(Pair),
    Nested(Pair, Letter),
}

enum Action {
    Resolve(FValue),
    Request(Pair),
}

/// Shared-memo evaluator. One instance per [`check_loops`] or [`f_table`]
/// call; all state is private to the call.
struct Evaluator<'p> {
    program: &'p LigProgram,
    memo: HashMap<Pair, Slot>,
    evaluated: usize,
}

impl<'p> Evaluator<'p> {
    fn new(program: &'p LigProgram) -> Self {
        Evaluator {
            program,
            memo: HashMap::new(),
            evaluated: 0,
        }
    }

    fn stats(&self) -> EvalStats {
        EvalStats {
            evaluated: self.evaluated,
            distinct_pairs: self.memo.len(),
        }
    }

    fn expand(&self, (alpha, omega): Pair) -> Expansion {
        let Some(rule) = self.program.rule(alpha, omega) else {
            return Expansion::Value(omega);
        };
        let z = rule.letter;
        match rule.op {
            LigOp::Merge | LigOp::KeepLeftAdv => Expansion::Value(z),
            LigOp::KeepRightAdv | LigOp::KeepBothAdv2 => Expansion::Value(omega),
            LigOp::KeepRight | LigOp::KeepBothAdv1 => Expansion::Tail((z, omega)),
            LigOp::KeepLeft => Expansion::Tail((alpha, z)),
            LigOp::KeepBoth => Expansion::Nested((alpha, z), omega),
            LigOp::None => unreachable!("programs never store the default"),
        }
    }

    fn eval(&mut self, start: Pair) -> FValue {
        if let Some(Slot::Done(v)) = self.memo.get(&start) {
            return v.clone();
        }
        self.memo.insert(start, Slot::InProgress);
        self.evaluated += 1;
        let mut stack = vec![Frame {
            pair: start,
            stage: Stage::Start,
        }];
        let mut incoming: Option<FValue> = None;
        loop {
            let top = stack
                .last_mut()
                .expect("loop exits before the stack empties");
            let action = match incoming.take() {
                None => match self.expand(top.pair) {
                    Expansion::Value(l) => Action::Resolve(FValue::Defined(l)),
                    Expansion::Tail(q) => {
                        top.stage = Stage::AwaitTail;
                        Action::Request(q)
                    }
                    Expansion::Nested(inner, omega) => {
                        top.stage = Stage::AwaitInner { omega };
                        Action::Request(inner)
                    }
                },
                Some(FValue::Undefined(c)) => Action::Resolve(FValue::Undefined(c)),
                Some(FValue::Defined(l)) => match top.stage {
                    Stage::AwaitInner { omega } => {
                        top.stage = Stage::AwaitTail;
                        Action::Request((l, omega))
                    }
                    Stage::AwaitTail => Action::Resolve(FValue::Defined(l)),
                    Stage::Start => unreachable!("values only arrive at waiting frames"),
                },
            };
            match action {
                Action::Resolve(v) => {
                    let frame = stack.pop().expect("resolving the frame just inspected");
                    self.memo.insert(frame.pair, Slot::Done(v.clone()));
                    if stack.is_empty() {
                        return v;
                    }
                    incoming = Some(v);
                }
                Action::Request(q) => match self.memo.get(&q) {
                    Some(Slot::Done(v)) => incoming = Some(v.clone()),
                    Some(Slot::InProgress) => {
                        // q is somewhere below on this very stack: a cycle.
                        // Everything at or above it depends on the cycle, and
                        // everything below waits on it in turn, so the entire
                        // stack is undefined.
                        let at = stack
                            .iter()
                            .position(|f| f.pair == q)
                            .expect("in-progress pairs live on the stack");
                        let cycle = Cycle {
                            pairs: stack[at..].iter().map(|f| f.pair).collect(),
                        };
                        let v = FValue::Undefined(cycle);
                        while let Some(frame) = stack.pop() {
                            self.memo.insert(frame.pair, Slot::Done(v.clone()));
                        }
                        return v;
                    }
                    None => {
                        self.memo.insert(q, Slot::InProgress);
                        self.evaluated += 1;
                        stack.push(Frame {
                            pair: q,
                            stage: Stage::Start,
                        });
                    }
                },
            }
        }
    }
}

/// Evaluates the pair function for a single pair with a fresh memo.
pub fn f_eval(alpha: Letter, omega: Letter, program: &LigProgram) -> FValue {
    Evaluator::new(program).eval((alpha, omega))
}

/// Outcome of a whole-program loop check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoopReport {
    /// Distinct cycles, in the order the check found them.
    pub cycles: Vec<Cycle>,
    pub stats: EvalStats,
}

impl LoopReport {
    pub fn is_ok(&self) -> bool {
        self.cycles.is_empty()
    }

    /// `{"status": "OK"|"CYCLE", "cycles": [[["a","z"],["a","b"]], ...]}`
    pub fn to_json(&self) -> String {
        let cycles: Vec<_> = self
            .cycles
            .iter()
            .map(|c| {
                c.pairs
                    .iter()
                    .map(|(a, w)| json!([a.display_token(), w.display_token()]))
                    .collect::<Vec<_>>()
            })
            .collect();
        json!({
            "status": if self.is_ok() { "OK" } else { "CYCLE" },
            "cycles": cycles,
        })
        .to_string()
    }
}

/// Decides loop-freedom by evaluating the pair function at every rule pair
/// (and, transitively, every pair those evaluations reach) over one shared
/// memo table.
pub fn check_loops(program: &LigProgram) -> LoopReport {
    let mut ev = Evaluator::new(program);
    let mut cycles: Vec<Cycle> = Vec::new();
    for pair in program.pairs() {
        if let FValue::Undefined(c) = ev.eval(pair) {
            if !cycles.contains(&c) {
                cycles.push(c);
            }
        }
    }
    LoopReport {
        cycles,
        stats: ev.stats(),
    }
}

/// The pair function materialized over every pair a loop check touches.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FTable {
    entries: BTreeMap<Pair, FValue>,
}

impl FTable {
    pub fn get(&self, alpha: Letter, omega: Letter) -> Option<&FValue> {
        self.entries.get(&(alpha, omega))
    }

    pub fn iter(&self) -> impl Iterator<Item = (Pair, &FValue)> {
        self.entries.iter().map(|(&p, v)| (p, v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `{"<alpha>,<omega>": "<letter>"|"UNDEF", ...}`; `{}` when empty.
    pub fn to_json(&self) -> String {
        let mut map = serde_json::Map::new();
        for ((a, w), v) in &self.entries {
            let key = format!("{},{}", a.display_token(), w.display_token());
            let value = match v {
                FValue::Defined(l) => l.display_token(),
                FValue::Undefined(_) => "UNDEF".to_string(),
            };
            map.insert(key, serde_json::Value::String(value));
        }
        serde_json::Value::Object(map).to_string()
    }
}

/// Runs the same evaluation as [`check_loops`] and dumps the memo table.
pub fn f_table(program: &LigProgram) -> FTable {
    let mut ev = Evaluator::new(program);
    for pair in program.pairs() {
        ev.eval(pair);
    }
    let entries = ev
        .memo
        .into_iter()
        .map(|(p, slot)| match slot {
            Slot::Done(v) => (p, v),
            Slot::InProgress => unreachable!("all evaluations have finished"),
        })
        .collect();
    FTable { entries }
}
