//! Link diagrams as connected 4-valent planar maps with crossing data.
//!
//! A crossing is stored in PD order: slot 0 holds the incoming understrand
//! and the remaining slots follow counterclockwise, so slots 0/2 carry the
//! understrand and slots 1/3 the overstrand. Edges are labelled `1..=2n`.
//! Faces are read off the rotation system given by the slot order; corner
//! `k` of a crossing is the angle between slots `k` and `k + 1`.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::DiagramError;

pub type EdgeId = usize;

/// One end of an edge: a crossing and a slot position 0..4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Incidence {
    pub crossing: usize,
    pub slot: u8,
}

impl Incidence {
    pub fn new(crossing: usize, slot: u8) -> Self {
        Incidence {
            crossing,
            slot: slot % 4,
        }
    }

    /// The slot across the crossing on the same strand.
    pub fn opposite(self) -> Self {
        Incidence::new(self.crossing, self.slot + 2)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Crossing {
    pub id: usize,
    pub slots: [EdgeId; 4],
    /// Slot (1 or 3) where the overstrand enters.
    pub over_in: u8,
}

impl Crossing {
    pub fn edge(&self, slot: u8) -> EdgeId {
        self.slots[(slot % 4) as usize]
    }

    pub fn is_over(slot: u8) -> bool {
        slot % 2 == 1
    }

    pub fn is_incoming(&self, slot: u8) -> bool {
        let slot = slot % 4;
        slot == 0 || slot == self.over_in
    }

    /// +1 for a right-handed crossing, -1 for a left-handed one.
    pub fn sign(&self) -> i8 {
        if self.over_in == 3 {
            1
        } else {
            -1
        }
    }
}

/// An arc between two crossings, directed `from` the end where it leaves a
/// crossing `to` the end where it enters the next one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub id: EdgeId,
    pub from: Incidence,
    pub to: Incidence,
}

/// The angle at `crossing` between slots `slot` and `slot + 1`; `edge` is the
/// edge in `slot`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Corner {
    pub edge: EdgeId,
    pub crossing: usize,
    pub slot: u8,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub corners: Vec<Corner>,
}

impl Face {
    pub fn degree(&self) -> usize {
        self.corners.len()
    }
}

/// Unchecked crossing table, as it comes out of a parser.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawDiagram {
    pub crossings: Vec<Vec<EdgeId>>,
    over_in: Option<Vec<u8>>,
}

impl RawDiagram {
    pub fn new(crossings: Vec<Vec<EdgeId>>) -> Self {
        RawDiagram {
            crossings,
            over_in: None,
        }
    }

    /// A table whose overstrand directions are already known.
    pub(crate) fn oriented(crossings: Vec<[EdgeId; 4]>, over_in: Vec<u8>) -> Self {
        RawDiagram {
            crossings: crossings.into_iter().map(|c| c.to_vec()).collect(),
            over_in: Some(over_in),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Issue {
    Empty,
    NonFourValent {
        crossing: usize,
        found: usize,
    },
    LabelOutOfRange {
        label: usize,
    },
    DanglingEdge {
        edge: EdgeId,
    },
    MissingEdge {
        edge: EdgeId,
    },
    OverusedEdge {
        edge: EdgeId,
        count: usize,
    },
    InconsistentOrientation {
        edge: EdgeId,
    },
    NonPlanar {
        crossing: usize,
        faces: usize,
        expected: usize,
    },
    Disconnected {
        pieces: usize,
    },
    NugatoryCrossings {
        crossings: Vec<usize>,
    },
}

impl Issue {
    /// Nugatory crossings are reported but do not make a diagram invalid.
    pub fn is_blocking(&self) -> bool {
        !matches!(self, Issue::NugatoryCrossings { .. })
    }

    fn into_error(self, max: usize) -> DiagramError {
        match self {
            Issue::Empty => DiagramError::Empty,
            Issue::NonFourValent { crossing, found } => {
                DiagramError::NotFourValent { crossing, found }
            }
            Issue::LabelOutOfRange { label } => DiagramError::LabelOutOfRange { label, max },
            Issue::DanglingEdge { edge } => DiagramError::LabelMultiplicity { edge, count: 1 },
            Issue::MissingEdge { edge } => DiagramError::LabelMultiplicity { edge, count: 0 },
            Issue::OverusedEdge { edge, count } => DiagramError::LabelMultiplicity { edge, count },
            Issue::InconsistentOrientation { edge } => {
                DiagramError::InconsistentOrientation { edge }
            }
            Issue::NonPlanar {
                crossing,
                faces,
                expected,
            } => DiagramError::NonPlanar {
                crossing,
                faces,
                expected,
            },
            // not structural; never produced by `build`
            Issue::Disconnected { .. } | Issue::NugatoryCrossings { .. } => {
                DiagramError::MalformedIncidence {
                    crossing: 0,
                    slot: 0,
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub issues: Vec<Issue>,
}

/// Checks every structural invariant of `raw` and reports all findings.
///
/// A diagram is `ok` when it is 4-valent, every edge label pairs exactly two
/// slots, strands can be oriented consistently, every piece is planar, and
/// the diagram is connected. Nugatory crossings are listed as a non-blocking
/// finding.
pub fn validate(raw: &RawDiagram) -> ValidationReport {
    match build(raw) {
        Ok(diagram) => diagram.validate(),
        Err(issues) => ValidationReport { ok: false, issues },
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkDiagram {
    crossings: Vec<Crossing>,
    edges: Vec<Edge>,
    link_components: usize,
    pieces: usize,
}

/// Orientation-free structural fingerprint; equal iff the two diagrams are
/// related by a relabelling and an orientation-preserving map of the sphere.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u32>);

impl LinkDiagram {
    pub fn from_raw(raw: &RawDiagram) -> Result<Self, DiagramError> {
        let max = 2 * raw.crossings.len();
        build(raw).map_err(|issues| {
            issues
                .into_iter()
                .next()
                .map(|i| i.into_error(max))
                .unwrap_or(DiagramError::Empty)
        })
    }

    /// Builds a diagram from PD tuples, inferring overstrand directions.
    pub fn from_pd(tuples: &[[EdgeId; 4]]) -> Result<Self, DiagramError> {
        Self::from_raw(&RawDiagram::new(
            tuples.iter().map(|t| t.to_vec()).collect(),
        ))
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing(&self, id: usize) -> Option<&Crossing> {
        self.crossings.get(id)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> &Edge {
        &self.edges[id - 1]
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn link_components(&self) -> usize {
        self.link_components
    }

    /// Number of connected pieces of the projection.
    pub fn pieces(&self) -> usize {
        self.pieces
    }

    pub fn is_connected(&self) -> bool {
        self.pieces == 1
    }

    pub fn pd_tuples(&self) -> Vec<[EdgeId; 4]> {
        self.crossings.iter().map(|c| c.slots).collect()
    }

    pub fn to_raw(&self) -> RawDiagram {
        RawDiagram::oriented(
            self.pd_tuples(),
            self.crossings.iter().map(|c| c.over_in).collect(),
        )
    }

    /// The other end of the edge sitting at `at`.
    pub fn partner(&self, at: Incidence) -> Incidence {
        let edge = &self.edges[self.crossings[at.crossing].edge(at.slot) - 1];
        if edge.from == at {
            edge.to
        } else {
            edge.from
        }
    }

    pub fn validate(&self) -> ValidationReport {
        let mut issues = Vec::new();
        if self.pieces > 1 {
            issues.push(Issue::Disconnected {
                pieces: self.pieces,
            });
        }
        let (_, nugatory) = self.is_reduced();
        if !nugatory.is_empty() {
            issues.push(Issue::NugatoryCrossings {
                crossings: nugatory,
            });
        }
        ValidationReport {
            ok: issues.iter().all(|i| !i.is_blocking()),
            issues,
        }
    }

    pub fn faces(&self) -> Vec<Face> {
        trace_faces(self.crossings.len(), |at| self.partner(at))
            .into_iter()
            .map(|darts| Face {
                corners: darts
                    .into_iter()
                    .map(|d| Corner {
                        edge: self.crossings[d.crossing].edge(d.slot),
                        crossing: d.crossing,
                        slot: d.slot,
                    })
                    .collect(),
            })
            .collect()
    }

    /// Face index (into `faces()`) of every corner, per crossing.
    pub fn corner_faces(&self) -> Vec<[usize; 4]> {
        let mut table = vec![[usize::MAX; 4]; self.crossings.len()];
        for (f, face) in self.faces().iter().enumerate() {
            for c in &face.corners {
                table[c.crossing][c.slot as usize] = f;
            }
        }
        table
    }

    /// Crossings where one face meets two opposite corners.
    pub fn nugatory_crossings(&self) -> Vec<usize> {
        self.corner_faces()
            .iter()
            .enumerate()
            .filter(|(_, f)| f[0] == f[2] || f[1] == f[3])
            .map(|(i, _)| i)
            .collect()
    }

    pub fn is_reduced(&self) -> (bool, Vec<usize>) {
        let nugatory = self.nugatory_crossings();
        (nugatory.is_empty(), nugatory)
    }

    /// Strand traversals: for each link component, the incidences where it
    /// enters successive crossings.
    pub fn strands(&self) -> Vec<Vec<Incidence>> {
        let mut seen = vec![[false; 4]; self.crossings.len()];
        let mut out = Vec::new();
        for c in 0..self.crossings.len() {
            for s in 0..4u8 {
                if seen[c][s as usize] || !self.crossings[c].is_incoming(s) {
                    continue;
                }
                let start = Incidence::new(c, s);
                let mut cur = start;
                let mut strand = Vec::new();
                loop {
                    seen[cur.crossing][cur.slot as usize] = true;
                    strand.push(cur);
                    cur = self.partner(cur.opposite());
                    if cur == start {
                        break;
                    }
                }
                out.push(strand);
            }
        }
        out
    }

    pub fn is_alternating(&self) -> bool {
        self.strands().iter().all(|strand| {
            let passes: Vec<bool> = strand.iter().map(|i| Crossing::is_over(i.slot)).collect();
            (0..passes.len()).all(|i| passes[i] != passes[(i + 1) % passes.len()])
        })
    }

    /// Flips over/under at every crossing in `subset`; the planar map and the
    /// strand orientations are unchanged.
    pub fn mirror(&self, subset: &[usize]) -> Result<LinkDiagram, DiagramError> {
        let mut flip = vec![false; self.crossings.len()];
        for &id in subset {
            *flip.get_mut(id).ok_or(DiagramError::InvalidCrossing(id))? = true;
        }
        let mut tuples = Vec::with_capacity(self.crossings.len());
        let mut over_in = Vec::with_capacity(self.crossings.len());
        for (c, &f) in self.crossings.iter().zip(&flip) {
            let [a, b, cc, d] = c.slots;
            match (f, c.over_in) {
                (false, o) => {
                    tuples.push(c.slots);
                    over_in.push(o);
                }
                (true, 3) => {
                    tuples.push([d, a, b, cc]);
                    over_in.push(1);
                }
                (true, _) => {
                    tuples.push([b, cc, d, a]);
                    over_in.push(3);
                }
            }
        }
        LinkDiagram::from_raw(&RawDiagram::oriented(tuples, over_in))
    }

    pub fn mirror_all(&self) -> LinkDiagram {
        let all: Vec<usize> = (0..self.crossings.len()).collect();
        self.mirror(&all).expect("all ids are valid")
    }

    /// Connected pieces of the projection, as sorted crossing-id lists.
    pub fn piece_crossings(&self) -> Vec<Vec<usize>> {
        let n = self.crossings.len();
        let mut piece = vec![usize::MAX; n];
        let mut out = Vec::new();
        for start in 0..n {
            if piece[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            piece[start] = id;
            let mut queue = VecDeque::from([start]);
            while let Some(c) = queue.pop_front() {
                for s in 0..4 {
                    let p = self.partner(Incidence::new(c, s)).crossing;
                    if piece[p] == usize::MAX {
                        piece[p] = id;
                        members.push(p);
                        queue.push_back(p);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    fn code_from(&self, anchor: Incidence, order: Option<&mut Vec<usize>>) -> Vec<u32> {
        let n = self.crossings.len();
        let mut index = vec![u32::MAX; n];
        let mut base = vec![0u8; n];
        let mut queue = vec![anchor.crossing];
        index[anchor.crossing] = 0;
        base[anchor.crossing] = anchor.slot;
        let mut code = Vec::new();
        let mut head = 0;
        while head < queue.len() {
            let c = queue[head];
            head += 1;
            code.push((base[c] % 2) as u32);
            for r in 0..4u8 {
                let p = self.partner(Incidence::new(c, base[c] + r));
                if index[p.crossing] == u32::MAX {
                    index[p.crossing] = queue.len() as u32;
                    base[p.crossing] = p.slot;
                    queue.push(p.crossing);
                }
                code.push(index[p.crossing]);
                code.push(((p.slot + 4 - base[p.crossing]) % 4) as u32);
            }
        }
        if let Some(order) = order {
            order.extend(queue);
        }
        code
    }

    fn piece_canonical(&self, members: &[usize]) -> (Vec<u32>, Incidence) {
        let mut best: Option<(Vec<u32>, Incidence)> = None;
        for &c in members {
            for s in 0..4 {
                let anchor = Incidence::new(c, s);
                let code = self.code_from(anchor, None);
                if best.as_ref().is_none_or(|(b, _)| code < *b) {
                    best = Some((code, anchor));
                }
            }
        }
        best.expect("pieces are non-empty")
    }

    pub fn canonical_form(&self) -> CanonicalForm {
        let mut codes: Vec<Vec<u32>> = self
            .piece_crossings()
            .iter()
            .map(|m| self.piece_canonical(m).0)
            .collect();
        codes.sort();
        let mut out = Vec::new();
        for code in codes {
            out.push(code.len() as u32);
            out.extend(code);
        }
        CanonicalForm(out)
    }

    pub fn structurally_eq(&self, other: &LinkDiagram) -> bool {
        self.crossing_count() == other.crossing_count()
            && self.canonical_form() == other.canonical_form()
    }

    /// Crossing ids in canonical order: breadth-first from the anchor that
    /// minimises the structural code, piece by piece.
    pub fn canonical_order(&self) -> Vec<usize> {
        let mut pieces: Vec<(Vec<u32>, Incidence)> = self
            .piece_crossings()
            .iter()
            .map(|m| self.piece_canonical(m))
            .collect();
        pieces.sort();
        let mut order = Vec::with_capacity(self.crossings.len());
        for (_, anchor) in pieces {
            self.code_from(anchor, Some(&mut order));
        }
        order
    }

    /// The same diagram with crossings renumbered canonically and edges
    /// labelled consecutively along each component.
    pub fn canonical_relabel(&self) -> LinkDiagram {
        let order = self.canonical_order();
        let mut label = vec![0usize; self.edges.len() + 1];
        let mut next = 1;
        for &c in &order {
            for s in 0..4u8 {
                let e = self.crossings[c].edge(s);
                if label[e] != 0 {
                    continue;
                }
                let mut cur = self.edge(e).clone();
                while label[cur.id] == 0 {
                    label[cur.id] = next;
                    next += 1;
                    let out = cur.to.opposite();
                    cur = self
                        .edge(self.crossings[out.crossing].edge(out.slot))
                        .clone();
                }
            }
        }
        let tuples = order
            .iter()
            .map(|&c| self.crossings[c].slots.map(|e| label[e]))
            .collect();
        let over_in = order.iter().map(|&c| self.crossings[c].over_in).collect();
        LinkDiagram::from_raw(&RawDiagram::oriented(tuples, over_in))
            .expect("relabelling preserves validity")
    }
}

/// Face traversal over darts `(crossing, slot)`: leave along the slot, arrive
/// at the partner, then leave again by the slot just clockwise of the arrival.
pub(crate) fn trace_faces(
    n: usize,
    partner: impl Fn(Incidence) -> Incidence,
) -> Vec<Vec<Incidence>> {
    let mut seen = vec![[false; 4]; n];
    let mut faces = Vec::new();
    for c in 0..n {
        for s in 0..4u8 {
            if seen[c][s as usize] {
                continue;
            }
            let mut face = Vec::new();
            let mut cur = Incidence::new(c, s);
            while !seen[cur.crossing][cur.slot as usize] {
                seen[cur.crossing][cur.slot as usize] = true;
                face.push(cur);
                let arrive = partner(cur);
                cur = Incidence::new(arrive.crossing, arrive.slot + 3);
            }
            faces.push(face);
        }
    }
    faces
}

fn build(raw: &RawDiagram) -> Result<LinkDiagram, Vec<Issue>> {
    let n = raw.crossings.len();
    if n == 0 {
        return Err(vec![Issue::Empty]);
    }
    let mut issues = Vec::new();
    for (i, c) in raw.crossings.iter().enumerate() {
        if c.len() != 4 {
            issues.push(Issue::NonFourValent {
                crossing: i,
                found: c.len(),
            });
        }
    }
    if !issues.is_empty() {
        return Err(issues);
    }

    let max = 2 * n;
    let mut ends: Vec<Vec<Incidence>> = vec![Vec::new(); max + 1];
    for (i, c) in raw.crossings.iter().enumerate() {
        for (s, &label) in c.iter().enumerate() {
            if label == 0 || label > max {
                issues.push(Issue::LabelOutOfRange { label });
            } else {
                ends[label].push(Incidence::new(i, s as u8));
            }
        }
    }
    for (label, e) in ends.iter().enumerate().skip(1) {
        match e.len() {
            2 => {}
            0 => issues.push(Issue::MissingEdge { edge: label }),
            1 => issues.push(Issue::DanglingEdge { edge: label }),
            count => issues.push(Issue::OverusedEdge { edge: label, count }),
        }
    }
    if !issues.is_empty() {
        return Err(issues);
    }

    let slots: Vec<[EdgeId; 4]> = raw
        .crossings
        .iter()
        .map(|c| [c[0], c[1], c[2], c[3]])
        .collect();
    let partner = |at: Incidence| -> Incidence {
        let e = &ends[slots[at.crossing][at.slot as usize]];
        if e[0] == at {
            e[1]
        } else {
            e[0]
        }
    };

    // Fixed directions: slot 0 enters, slot 2 leaves, plus any known overstrand.
    let fixed = |at: Incidence| -> Option<bool> {
        match at.slot {
            0 => Some(true),
            2 => Some(false),
            s => raw.over_in.as_ref().map(|o| o[at.crossing] == s),
        }
    };

    let mut incoming = vec![[false; 4]; n];
    let mut seen = vec![[false; 4]; n];
    let mut link_components = 0;
    for c in 0..n {
        for s in 0..4u8 {
            if seen[c][s as usize] {
                continue;
            }
            // Walk the strand treating (c, s) as an entry.
            let start = Incidence::new(c, s);
            let mut walk: Vec<(Incidence, Incidence)> = Vec::new();
            let mut cur = start;
            loop {
                let exit = cur.opposite();
                seen[cur.crossing][cur.slot as usize] = true;
                seen[exit.crossing][exit.slot as usize] = true;
                walk.push((cur, exit));
                cur = partner(exit);
                if cur == start {
                    break;
                }
            }
            link_components += 1;
            let mut forward_ok = true;
            let mut backward_ok = true;
            let mut conflict = None;
            for &(entry, exit) in &walk {
                match (fixed(entry), fixed(exit)) {
                    (Some(true), _) | (_, Some(false)) => backward_ok = false,
                    _ => {}
                }
                match (fixed(entry), fixed(exit)) {
                    (Some(false), _) | (_, Some(true)) => {
                        forward_ok = false;
                        conflict.get_or_insert(slots[exit.crossing][exit.slot as usize]);
                    }
                    _ => {}
                }
            }
            let forward = match (forward_ok, backward_ok) {
                (true, false) => true,
                (false, true) => false,
                (true, true) => {
                    // No constraint at all: prefer increasing labels.
                    let labels: Vec<usize> = walk
                        .iter()
                        .map(|(_, x)| slots[x.crossing][x.slot as usize])
                        .collect();
                    let k = labels.len();
                    let up = (0..k)
                        .filter(|&i| labels[(i + 1) % k] == labels[i] + 1)
                        .count();
                    let down = (0..k)
                        .filter(|&i| labels[i] == labels[(i + 1) % k] + 1)
                        .count();
                    up >= down
                }
                (false, false) => {
                    issues.push(Issue::InconsistentOrientation {
                        edge: conflict.unwrap_or(slots[c][s as usize]),
                    });
                    continue;
                }
            };
            for &(entry, exit) in &walk {
                incoming[entry.crossing][entry.slot as usize] = forward;
                incoming[exit.crossing][exit.slot as usize] = !forward;
            }
        }
    }
    if !issues.is_empty() {
        return Err(issues);
    }

    let crossings: Vec<Crossing> = slots
        .iter()
        .enumerate()
        .map(|(id, &sl)| Crossing {
            id,
            slots: sl,
            over_in: if incoming[id][1] { 1 } else { 3 },
        })
        .collect();
    let edges: Vec<Edge> = (1..=max)
        .map(|label| {
            let [a, b] = [ends[label][0], ends[label][1]];
            let (from, to) = if incoming[a.crossing][a.slot as usize] {
                (b, a)
            } else {
                (a, b)
            };
            Edge {
                id: label,
                from,
                to,
            }
        })
        .collect();

    // Pieces of the projection.
    let mut piece = vec![usize::MAX; n];
    let mut piece_size = Vec::new();
    for start in 0..n {
        if piece[start] != usize::MAX {
            continue;
        }
        let id = piece_size.len();
        piece[start] = id;
        let mut size = 0;
        let mut stack = vec![start];
        while let Some(c) = stack.pop() {
            size += 1;
            for s in 0..4 {
                let p = partner(Incidence::new(c, s)).crossing;
                if piece[p] == usize::MAX {
                    piece[p] = id;
                    stack.push(p);
                }
            }
        }
        piece_size.push(size);
    }

    let mut face_count = vec![0usize; piece_size.len()];
    for face in trace_faces(n, partner) {
        face_count[piece[face[0].crossing]] += 1;
    }
    for (p, (&faces, &size)) in face_count.iter().zip(&piece_size).enumerate() {
        if faces != size + 2 {
            issues.push(Issue::NonPlanar {
                crossing: piece.iter().position(|&x| x == p).unwrap_or(0),
                faces,
                expected: size + 2,
            });
        }
    }
    if !issues.is_empty() {
        return Err(issues);
    }

    Ok(LinkDiagram {
        crossings,
        edges,
        link_components,
        pieces: piece_size.len(),
    })
}
