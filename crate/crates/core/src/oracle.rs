//! Explicit planar diagrams of closed rational tangles, brute-force Kauffman
//! state sums and crossing-sign writhes. Shares no code with the skein
//! recursion in `tangle_bracket` beyond the twist sequence itself.

use std::fmt::Write as _;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Var};
use crate::rational::Fraction;
use crate::tangle_bracket::{BaseTangle, Twist, TwistSequence};

pub const MAX_STATE_SUM_CROSSINGS: usize = 22;

/// Corners of a crossing, with NW at the top left.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Slot {
    NW,
    NE,
    SW,
    SE,
}

impl Slot {
    pub const ALL: [Slot; 4] = [Slot::NW, Slot::NE, Slot::SW, Slot::SE];

    fn index(self) -> usize {
        self as usize
    }

    fn from_index(i: usize) -> Slot {
        Slot::ALL[i]
    }

    /// Where a strand entering here leaves the crossing.
    pub fn opposite(self) -> Slot {
        match self {
            Slot::NW => Slot::SE,
            Slot::SE => Slot::NW,
            Slot::NE => Slot::SW,
            Slot::SW => Slot::NE,
        }
    }

    /// Direction of travel (x right, y up) for a strand entering here.
    fn heading(self) -> (i64, i64) {
        match self {
            Slot::NW => (1, -1),
            Slot::SE => (-1, 1),
            Slot::NE => (-1, -1),
            Slot::SW => (1, 1),
        }
    }

    /// Next corner counterclockwise.
    fn ccw(self) -> Slot {
        match self {
            Slot::NE => Slot::NW,
            Slot::NW => Slot::SW,
            Slot::SW => Slot::SE,
            Slot::SE => Slot::NE,
        }
    }

    fn on_nw_se(self) -> bool {
        matches!(self, Slot::NW | Slot::SE)
    }
}

/// Which diagonal of every crossing passes over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum OverStrand {
    NwSe,
    NeSw,
}

/// How the four ends of the tangle are joined.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Closure {
    /// NW to SW and NE to SE.
    Denominator,
    /// NW to NE and SW to SE.
    Numerator,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarDiagram {
    source: Fraction,
    over: OverStrand,
    closure: Closure,
    crossings: usize,
    edges: Vec<(usize, usize)>,
    incident: Vec<Vec<usize>>,
    /// Arc id at each crossing slot, indexed `4 * crossing + slot`.
    slot_arc: Vec<usize>,
    /// The two crossing slots at the ends of each arc.
    arc_ends: Vec<[usize; 2]>,
    free_loops: usize,
    /// The two closing edges, each with the node it is first traversed from.
    anchors: [(usize, usize); 2],
}

const BASE_NODES: usize = 4;

fn slot_node(crossing: usize, slot: Slot) -> usize {
    BASE_NODES + 4 * crossing + slot.index()
}

fn node_slot(node: usize) -> Option<(usize, Slot)> {
    (node >= BASE_NODES).then(|| ((node - BASE_NODES) / 4, Slot::from_index((node - BASE_NODES) % 4)))
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        self.0[ra] = rb;
    }
}

impl PlanarDiagram {
    /// A single circle with no crossings.
    pub fn unknot() -> Self {
        Self::assemble(Fraction::ZERO, OverStrand::NwSe, Closure::Denominator, 0, vec![(0, 1), (1, 0)], [(0, 0), (0, 1)])
    }

    /// The same diagram with one more disjoint circle.
    pub fn with_free_loop(&self) -> Self {
        let mut d = self.clone();
        d.free_loops += 1;
        d
    }

    fn assemble(
        source: Fraction,
        over: OverStrand,
        closure: Closure,
        crossings: usize,
        edges: Vec<(usize, usize)>,
        anchors: [(usize, usize); 2],
    ) -> Self {
        let nodes = BASE_NODES + 4 * crossings;
        let mut incident = vec![Vec::new(); nodes];
        for (id, &(a, b)) in edges.iter().enumerate() {
            incident[a].push(id);
            incident[b].push(id);
        }
        let mut uf = UnionFind::new(nodes);
        for &(a, b) in &edges {
            uf.union(a, b);
        }
        let mut root_arc = vec![usize::MAX; nodes];
        let mut slot_arc = vec![0; 4 * crossings];
        let mut arc_ends: Vec<Vec<usize>> = Vec::new();
        for node in BASE_NODES..nodes {
            let root = uf.find(node);
            if root_arc[root] == usize::MAX {
                root_arc[root] = arc_ends.len();
                arc_ends.push(Vec::new());
            }
            slot_arc[node - BASE_NODES] = root_arc[root];
            arc_ends[root_arc[root]].push(node);
        }
        // classes of used nodes holding no crossing slot are free circles
        let mut free = std::collections::BTreeSet::new();
        for &(a, _) in &edges {
            let root = uf.find(a);
            if root_arc[root] == usize::MAX {
                free.insert(root);
            }
        }
        let arc_ends = arc_ends
            .into_iter()
            .map(|ends| <[usize; 2]>::try_from(ends).expect("each arc joins two crossing slots"))
            .collect();
        PlanarDiagram {
            source,
            over,
            closure,
            crossings,
            edges,
            incident,
            slot_arc,
            arc_ends,
            free_loops: free.len(),
            anchors,
        }
    }

    pub fn source(&self) -> Fraction {
        self.source
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings
    }

    pub fn over_strand(&self) -> OverStrand {
        self.over
    }

    pub fn closure(&self) -> Closure {
        self.closure
    }

    pub fn arc_count(&self) -> usize {
        self.arc_ends.len()
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    /// Arc ids at the NW, NE, SW, SE corners of a crossing.
    pub fn arcs_at(&self, crossing: usize) -> [usize; 4] {
        Slot::ALL.map(|s| self.slot_arc[4 * crossing + s.index()])
    }

    fn arc_of(&self, node: usize) -> usize {
        self.slot_arc[node - BASE_NODES]
    }

    /// The crossing slot at the far end of the arc that leaves `node`.
    fn arc_partner(&self, node: usize) -> usize {
        let [a, b] = self.arc_ends[self.arc_of(node)];
        if a == node {
            b
        } else {
            a
        }
    }

    pub fn component_count(&self) -> usize {
        let mut uf = UnionFind::new(self.arc_count());
        for c in 0..self.crossings {
            let arcs = self.arcs_at(c);
            uf.union(arcs[Slot::NW.index()], arcs[Slot::SE.index()]);
            uf.union(arcs[Slot::NE.index()], arcs[Slot::SW.index()]);
        }
        let roots: std::collections::BTreeSet<usize> = (0..self.arc_count()).map(|a| uf.find(a)).collect();
        roots.len() + self.free_loops
    }

    /// Walks from `from` along `edge` until reaching a crossing slot.
    fn walk(&self, mut from: usize, mut edge: usize) -> Option<usize> {
        for _ in 0..=self.edges.len() {
            let (a, b) = self.edges[edge];
            let at = if a == from { b } else { a };
            if at >= BASE_NODES {
                return Some(at);
            }
            edge = *self.incident[at].iter().find(|&&e| e != edge).unwrap_or(&edge);
            from = at;
        }
        None
    }

    /// The entry slots visited by the strand that enters at `start`.
    fn trace(&self, start: usize) -> Vec<(usize, Slot)> {
        let mut visits = Vec::new();
        let mut entry = start;
        loop {
            let (c, s) = node_slot(entry).expect("crossing slot");
            visits.push((c, s));
            entry = self.arc_partner(slot_node(c, s.opposite()));
            if entry == start {
                return visits;
            }
        }
    }

    /// Smoothing pairs for the A and B states of a crossing.
    fn smoothings(&self, c: usize) -> ([[usize; 2]; 2], [[usize; 2]; 2]) {
        let arc = |s: Slot| self.slot_arc[4 * c + s.index()];
        let (a, b, cc, d) = match self.over {
            OverStrand::NwSe => (Slot::SW, Slot::SE, Slot::NE, Slot::NW),
            OverStrand::NeSw => (Slot::SE, Slot::NE, Slot::NW, Slot::SW),
        };
        ([[arc(a), arc(b)], [arc(cc), arc(d)]], [[arc(a), arc(d)], [arc(b), arc(cc)]])
    }
}

/// `D(T(α))` from the Euclidean expansion.
pub fn build_diagram(alpha: Fraction) -> Result<PlanarDiagram> {
    Ok(build_diagram_with(&TwistSequence::of(alpha)?, Closure::Denominator))
}

/// The closed diagram of a twist sequence, stacking regions from the
/// innermost out: horizontal crossings attach on the east side, vertical
/// ones on the south side.
pub fn build_diagram_with(seq: &TwistSequence, closure: Closure) -> PlanarDiagram {
    let crossings = seq.crossing_count() as usize;
    let mut edges = Vec::with_capacity(2 * crossings + 4);
    let [b_nw, b_ne, b_sw, b_se] = [0, 1, 2, 3];
    match seq.base() {
        BaseTangle::Zero => edges.extend([(b_nw, b_ne), (b_sw, b_se)]),
        BaseTangle::Infinity => edges.extend([(b_nw, b_sw), (b_ne, b_se)]),
    }
    let nw = b_nw;
    let (mut ne, mut sw, mut se) = (b_ne, b_sw, b_se);
    let mut next = 0;
    for region in seq.regions() {
        for _ in 0..region.crossings {
            let at = |s| slot_node(next, s);
            match region.twist {
                Twist::Horizontal => {
                    edges.push((ne, at(Slot::NW)));
                    edges.push((se, at(Slot::SW)));
                    ne = at(Slot::NE);
                    se = at(Slot::SE);
                }
                Twist::Vertical => {
                    edges.push((sw, at(Slot::NW)));
                    edges.push((se, at(Slot::NE)));
                    sw = at(Slot::SW);
                    se = at(Slot::SE);
                }
            }
            next += 1;
        }
    }
    let first = edges.len();
    let anchors = match closure {
        Closure::Denominator => {
            edges.push((nw, sw));
            edges.push((ne, se));
            // left arc upward, right arc downward
            [(first, sw), (first + 1, ne)]
        }
        Closure::Numerator => {
            edges.push((nw, ne));
            edges.push((sw, se));
            [(first, nw), (first + 1, se)]
        }
    };
    let over = if seq.is_mirrored() { OverStrand::NeSw } else { OverStrand::NwSe };
    PlanarDiagram::assemble(seq.continued_fraction().value(), over, closure, crossings, edges, anchors)
}

/// `Σ_states A^(#A - #B) δ^(loops - 1)` over all `2^c` smoothings.
pub fn state_sum_bracket(d: &PlanarDiagram) -> Result<LaurentPoly> {
    let c = d.crossings;
    if c > MAX_STATE_SUM_CROSSINGS {
        return Err(Error::TooManyCrossings(c));
    }
    let arcs = d.arc_count();
    let smoothings: Vec<_> = (0..c).map(|i| d.smoothings(i)).collect();
    let width = arcs + 1;
    let tally = |range: std::ops::Range<u64>| {
        let mut counts = vec![0u64; (c + 1) * width];
        let mut parent = vec![0usize; arcs];
        for state in range {
            for (i, p) in parent.iter_mut().enumerate() {
                *p = i;
            }
            let mut uf = UnionFind(std::mem::take(&mut parent));
            let mut a_count = 0;
            for (i, (a_pairs, b_pairs)) in smoothings.iter().enumerate() {
                let pairs = if state >> i & 1 == 0 {
                    a_count += 1;
                    a_pairs
                } else {
                    b_pairs
                };
                uf.union(pairs[0][0], pairs[0][1]);
                uf.union(pairs[1][0], pairs[1][1]);
            }
            let loops = (0..arcs).filter(|&x| uf.find(x) == x).count();
            counts[a_count * width + loops] += 1;
            parent = uf.0;
        }
        counts
    };
    let total = 1u64 << c;
    let counts = if c >= 14 {
        let chunk = 1u64 << 10;
        (0..total / chunk)
            .into_par_iter()
            .map(|k| tally(k * chunk..(k + 1) * chunk))
            .reduce(|| vec![0; (c + 1) * width], |mut x, y| {
                x.iter_mut().zip(y).for_each(|(a, b)| *a += b);
                x
            })
    } else {
        tally(0..total)
    };
    let mut sum = LaurentPoly::zero(Var::A);
    for a_count in 0..=c {
        for loops in 0..width {
            let n = counts[a_count * width + loops];
            if n == 0 {
                continue;
            }
            let exp = 2 * a_count as i64 - c as i64;
            let term = &LaurentPoly::monomial(Var::A, BigInt::from(n), exp)
                * &LaurentPoly::delta().pow((loops + d.free_loops) as i64 - 1)?;
            sum = &sum + &term;
        }
    }
    Ok(sum)
}

/// Orientations of a closed diagram. `Principal` sends the left closing arc
/// upward and, for a link, the right closing arc downward; the other three
/// reverse the second component, the first, or both.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Orientation {
    Principal,
    PlusMinus,
    MinusMinus,
    MinusPlus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedDiagram {
    diagram: PlanarDiagram,
    /// Each component as its sequence of (crossing, entry slot).
    components: Vec<Vec<(usize, Slot)>>,
}

impl OrientedDiagram {
    pub fn diagram(&self) -> &PlanarDiagram {
        &self.diagram
    }

    pub fn components(&self) -> &[Vec<(usize, Slot)>] {
        &self.components
    }

    /// `+1` or `-1` for each crossing.
    pub fn crossing_signs(&self) -> Vec<i8> {
        let mut entries: Vec<Vec<Slot>> = vec![Vec::new(); self.diagram.crossings];
        for &(c, s) in self.components.iter().flatten() {
            entries[c].push(s);
        }
        let over_nw_se = self.diagram.over == OverStrand::NwSe;
        entries
            .iter()
            .map(|slots| {
                let over = *slots.iter().find(|s| s.on_nw_se() == over_nw_se).expect("over strand");
                let under = *slots.iter().find(|s| s.on_nw_se() != over_nw_se).expect("under strand");
                let (o, u) = (over.heading(), under.heading());
                if o.0 * u.1 - o.1 * u.0 > 0 {
                    1
                } else {
                    -1
                }
            })
            .collect()
    }

    /// Crossing list with arcs numbered along the orientation; each crossing
    /// lists the incoming under arc first, then the others counterclockwise.
    pub fn pd_code(&self) -> String {
        let d = &self.diagram;
        let mut label = vec![0usize; 4 * d.crossings];
        let mut next = 1;
        for comp in &self.components {
            let k = comp.len();
            for (j, &(c, s)) in comp.iter().enumerate() {
                label[4 * c + s.index()] = next + j;
                label[4 * c + s.opposite().index()] = next + (j + 1) % k;
            }
            next += k;
        }
        let over_nw_se = d.over == OverStrand::NwSe;
        let mut under_in = vec![Slot::NW; d.crossings];
        for &(c, s) in self.components.iter().flatten() {
            if s.on_nw_se() != over_nw_se {
                under_in[c] = s;
            }
        }
        let mut out = String::from("PD[");
        for c in 0..d.crossings {
            let mut s = under_in[c];
            let mut ids = Vec::with_capacity(4);
            for _ in 0..4 {
                ids.push(label[4 * c + s.index()].to_string());
                s = s.ccw();
            }
            let _ = write!(out, "{}X[{}]", if c > 0 { ", " } else { "" }, ids.join(", "));
        }
        out.push(']');
        out
    }
}

pub fn orient_diagram(d: &PlanarDiagram, which: Orientation) -> Result<OrientedDiagram> {
    let components = d.component_count();
    if which != Orientation::Principal && components != 2 {
        return Err(Error::NotTwoComponent(d.source));
    }
    let mut oriented: Vec<Vec<(usize, Slot)>> = Vec::new();
    let mut seen = vec![false; d.crossings * 4];
    let mark = |visits: &Vec<(usize, Slot)>, seen: &mut Vec<bool>| {
        for &(c, s) in visits {
            seen[4 * c + s.index()] = true;
            seen[4 * c + s.opposite().index()] = true;
        }
    };
    for &(edge, from) in &d.anchors {
        let Some(entry) = d.walk(from, edge) else { continue };
        if seen[entry - BASE_NODES] {
            continue;
        }
        let visits = d.trace(entry);
        mark(&visits, &mut seen);
        oriented.push(visits);
    }
    // any component that avoids both closing arcs starts at its first slot
    while let Some(slot) = seen.iter().position(|&v| !v) {
        let visits = d.trace(slot + BASE_NODES);
        mark(&visits, &mut seen);
        oriented.push(visits);
    }
    let flip = |comp: &mut Vec<(usize, Slot)>| {
        comp.reverse();
        for v in comp.iter_mut() {
            v.1 = v.1.opposite();
        }
    };
    let (first, second) = match which {
        Orientation::Principal => (false, false),
        Orientation::PlusMinus => (false, true),
        Orientation::MinusPlus => (true, false),
        Orientation::MinusMinus => (true, true),
    };
    if first {
        if let Some(c) = oriented.get_mut(0) {
            flip(c);
        }
    }
    if second {
        if let Some(c) = oriented.get_mut(1) {
            flip(c);
        }
    }
    Ok(OrientedDiagram { diagram: d.clone(), components: oriented })
}

pub fn writhe_of(d: &OrientedDiagram) -> i64 {
    d.crossing_signs().iter().map(|&s| s as i64).sum()
}
