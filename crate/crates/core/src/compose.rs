//! Composition with failure (φ) matching on the right operand.
//!
//! A φ-arc at state `q` may be taken only when `q` has no arc for the symbol
//! being matched. Taking it does not consume input; matching retries at the
//! target, and the weights of all φ-arcs traversed are multiplied into the
//! composed arc. Output labels on φ-arcs are *not* emitted by the matcher,
//! only weights. Carrying outputs through a failure chain therefore requires
//! moving them into the weights first (see [`crate::phi_transduce`]).

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::fst::{Arc, Fst, Label, StateId, EPSILON};
use crate::semiring::Semiring;
use crate::transforms::connect;

/// Result of a successful [`phi_lookup`].
#[derive(Clone, Debug, PartialEq)]
pub struct PhiMatch<W> {
    /// Non-consuming arcs followed before the match: φ-arcs, and the single
    /// ε-arc of a chain state entered through a φ-arc.
    pub hops: Vec<Arc<W>>,
    /// Arcs at the resolving state whose input label equals the query.
    pub matches: Vec<Arc<W>>,
    /// `⊗` of the hop weights, excluding the matched arc.
    pub acc_weight: W,
}

/// Resolves `label` at `state` through the failure structure of `fst`.
///
/// Returns `Ok(None)` when a state with neither a matching arc nor a way to
/// fall back is reached.
pub fn phi_lookup<W: Semiring>(
    fst: &Fst<W>,
    state: StateId,
    label: Label,
    phi: Label,
) -> Result<Option<PhiMatch<W>>> {
    debug_assert!(label != EPSILON && label != phi);
    let mut hops: Vec<Arc<W>> = Vec::new();
    let mut acc = W::one();
    let mut visited = vec![state];
    let mut cur = state;
    loop {
        let arcs = fst.arcs(cur);
        let matches: Vec<_> = arcs.iter().filter(|a| a.ilabel == label).cloned().collect();
        if !matches.is_empty() {
            return Ok(Some(PhiMatch {
                hops,
                matches,
                acc_weight: acc,
            }));
        }
        let mut phis = arcs.iter().filter(|a| a.ilabel == phi);
        let hop = match (phis.next(), phis.next()) {
            (Some(_), Some(_)) => return Err(Error::MultiplePhiArcs(cur)),
            (Some(arc), None) => arc,
            (None, _) if cur != state => {
                // Chain states between a φ-arc and its target emit the rest
                // of a multi-symbol output through input-ε arcs.
                let mut eps = arcs.iter().filter(|a| a.ilabel == EPSILON);
                match (eps.next(), eps.next()) {
                    (Some(arc), None) => arc,
                    (None, _) => return Ok(None),
                    _ => return Err(Error::AmbiguousFailureContinuation(cur)),
                }
            }
            (None, _) => return Ok(None),
        };
        if visited.contains(&hop.nextstate) {
            return Err(Error::PhiCycle(hop.nextstate));
        }
        visited.push(hop.nextstate);
        acc = acc.times(&hop.weight);
        cur = hop.nextstate;
        hops.push(hop.clone());
    }
}

/// Weight of ending the input at `state`: the final weight if `state` is
/// final, otherwise the `⊕` over φ- and input-ε paths to final states, with
/// path weights `⊗`-accumulated. Final states end a path.
pub fn phi_final_weight<W: Semiring>(fst: &Fst<W>, state: StateId, phi: Label) -> Result<W> {
    let mut memo = HashMap::new();
    let mut on_path = Vec::new();
    final_chase(fst, state, phi, &mut memo, &mut on_path)
}

fn final_chase<W: Semiring>(
    fst: &Fst<W>,
    state: StateId,
    phi: Label,
    memo: &mut HashMap<StateId, W>,
    on_path: &mut Vec<StateId>,
) -> Result<W> {
    if let Some(w) = fst.final_weight(state) {
        return Ok(w.clone());
    }
    if let Some(w) = memo.get(&state) {
        return Ok(w.clone());
    }
    if on_path.contains(&state) {
        return Err(Error::PhiCycle(state));
    }
    on_path.push(state);
    let mut total = W::zero();
    for arc in fst.arcs(state) {
        if arc.ilabel == phi || arc.ilabel == EPSILON {
            let rest = final_chase(fst, arc.nextstate, phi, memo, on_path)?;
            total = total.plus(&arc.weight.times(&rest));
        }
    }
    on_path.pop();
    memo.insert(state, total.clone());
    Ok(total)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ComposeConfig {
    /// Failure label matched on the right operand; `None` means exact matching.
    pub phi_label: Option<Label>,
    /// Permit composition over a non-commutative semiring.
    pub allow_noncommute: bool,
}

impl ComposeConfig {
    pub fn with_phi(phi: Label) -> Self {
        ComposeConfig {
            phi_label: Some(phi),
            allow_noncommute: false,
        }
    }

    pub fn allow_noncommute(mut self) -> Self {
        self.allow_noncommute = true;
        self
    }
}

/// Work counters for one composition.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ComposeStats {
    /// Pair states discovered and expanded.
    pub states_visited: usize,
    /// Non-consuming arcs followed while matching.
    pub phi_hops: usize,
    /// Arcs created before trimming.
    pub arcs_created: usize,
}

pub fn compose<W: Semiring>(left: &Fst<W>, right: &Fst<W>, cfg: ComposeConfig) -> Result<Fst<W>> {
    compose_with_stats(left, right, cfg).map(|(fst, _)| fst)
}

/// Eager pair-state composition, trimmed.
///
/// There is no ε-filter, so redundant ε-interleavings may yield parallel
/// paths; with an idempotent `⊕` these do not change the weighted relation.
pub fn compose_with_stats<W: Semiring>(
    left: &Fst<W>,
    right: &Fst<W>,
    cfg: ComposeConfig,
) -> Result<(Fst<W>, ComposeStats)> {
    if !W::COMMUTATIVE && !cfg.allow_noncommute {
        return Err(Error::NonCommutative);
    }
    let mut stats = ComposeStats::default();
    let mut out = Fst::new();
    let (Some(ls), Some(rs)) = (left.start(), right.start()) else {
        return Ok((out, stats));
    };

    let mut ids: HashMap<(StateId, StateId), StateId> = HashMap::new();
    let mut queue = vec![(ls, rs)];
    ids.insert((ls, rs), out.add_state());
    out.set_start(0)?;
    let mut finals: HashMap<StateId, W> = HashMap::new();
    let mut pending: Vec<(StateId, Arc<W>, (StateId, StateId))> = Vec::new();

    let mut intern = |pair, out: &mut Fst<W>, queue: &mut Vec<_>| {
        *ids.entry(pair).or_insert_with(|| {
            queue.push(pair);
            out.add_state()
        })
    };

    while let Some((p, q)) = queue.pop() {
        stats.states_visited += 1;
        let src = intern((p, q), &mut out, &mut queue);

        for la in left.arcs(p) {
            if la.olabel == EPSILON {
                pending.push((
                    src,
                    Arc::new(la.ilabel, EPSILON, la.weight.clone(), 0),
                    (la.nextstate, q),
                ));
                continue;
            }
            match cfg.phi_label {
                Some(phi) if la.olabel != phi => {
                    if let Some(m) = phi_lookup(right, q, la.olabel, phi)? {
                        stats.phi_hops += m.hops.len();
                        let prefix = la.weight.times(&m.acc_weight);
                        for ra in &m.matches {
                            let w = prefix.times(&ra.weight);
                            pending.push((
                                src,
                                Arc::new(la.ilabel, ra.olabel, w, 0),
                                (la.nextstate, ra.nextstate),
                            ));
                        }
                    }
                }
                _ => {
                    for ra in right.arcs(q).iter().filter(|ra| ra.ilabel == la.olabel) {
                        let w = la.weight.times(&ra.weight);
                        pending.push((
                            src,
                            Arc::new(la.ilabel, ra.olabel, w, 0),
                            (la.nextstate, ra.nextstate),
                        ));
                    }
                }
            }
        }
        for ra in right.arcs(q).iter().filter(|ra| ra.ilabel == EPSILON) {
            pending.push((
                src,
                Arc::new(EPSILON, ra.olabel, ra.weight.clone(), 0),
                (p, ra.nextstate),
            ));
        }

        if let Some(lf) = left.final_weight(p) {
            let rf = match cfg.phi_label {
                Some(phi) => phi_final_weight(right, q, phi)?,
                None => right.final_or_zero(q),
            };
            let w = lf.times(&rf);
            if !w.is_zero() {
                finals.insert(src, w);
            }
        }

        for (src, mut arc, pair) in pending.drain(..) {
            if arc.weight.is_zero() {
                continue;
            }
            arc.nextstate = intern(pair, &mut out, &mut queue);
            stats.arcs_created += 1;
            out.add_arc(src, arc)?;
        }
    }
    for (q, w) in finals {
        out.set_final(q, w)?;
    }
    Ok((connect(&out), stats))
}
