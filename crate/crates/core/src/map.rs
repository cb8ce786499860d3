//! Mutable rotation-system view of a diagram, used by the rewrites.
//!
//! Nodes keep their ids until `to_diagram` compacts them. Each node stores
//! its four darts counterclockwise, which pair of opposite slots is over, and
//! whatever orientation is known per slot; orientation is settled component
//! by component on the way back to a `LinkDiagram`.

use std::collections::BTreeMap;

use crate::diagram::{Incidence, LinkDiagram, RawDiagram};
use crate::error::RewriteError;

#[derive(Debug, Clone)]
struct Node {
    alive: bool,
    link: [Option<Incidence>; 4],
    /// Slots 1 and 3 carry the over strand.
    over_odd: bool,
    incoming: [Option<bool>; 4],
}

#[derive(Debug, Clone)]
pub(crate) struct PlanarMap {
    nodes: Vec<Node>,
}

impl PlanarMap {
    pub fn from_diagram(d: &LinkDiagram) -> Self {
        let nodes = d
            .crossings()
            .iter()
            .map(|c| Node {
                alive: true,
                link: std::array::from_fn(|s| Some(d.partner(Incidence::new(c.id, s as u8)))),
                over_odd: true,
                incoming: std::array::from_fn(|s| Some(c.is_incoming(s as u8))),
            })
            .collect();
        PlanarMap { nodes }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn partner(&self, at: Incidence) -> Incidence {
        self.nodes[at.crossing].link[at.slot as usize].expect("dart is connected")
    }

    pub fn add_node(&mut self, over_odd: bool) -> usize {
        self.nodes.push(Node {
            alive: true,
            link: [None; 4],
            over_odd,
            incoming: [None; 4],
        });
        self.nodes.len() - 1
    }

    pub fn connect(&mut self, a: Incidence, b: Incidence) {
        self.nodes[a.crossing].link[a.slot as usize] = Some(b);
        self.nodes[b.crossing].link[b.slot as usize] = Some(a);
    }

    pub fn orientation(&self, at: Incidence) -> Option<bool> {
        self.nodes[at.crossing].incoming[at.slot as usize]
    }

    /// Records that the strand enters at `at` (or leaves, if `incoming` is
    /// false), and the matching fact for the opposite slot.
    pub fn set_orientation(&mut self, at: Incidence, incoming: Option<bool>) {
        let node = &mut self.nodes[at.crossing];
        node.incoming[at.slot as usize] = incoming;
        node.incoming[((at.slot + 2) % 4) as usize] = incoming.map(|b| !b);
    }

    pub fn flip(&mut self, node: usize) {
        self.nodes[node].over_odd ^= true;
    }

    /// Reverses the cyclic order at `node` (slot `s` moves to `(4 - s) % 4`),
    /// updating partner pointers. Strands and over slots are preserved.
    pub fn reverse(&mut self, node: usize) {
        let old = self.nodes[node].clone();
        let perm = |s: u8| (4 - s) % 4;
        for s in 0..4u8 {
            let ns = perm(s) as usize;
            self.nodes[node].incoming[ns] = old.incoming[s as usize];
            let target = old.link[s as usize].expect("dart is connected");
            let target = if target.crossing == node {
                Incidence::new(node, perm(target.slot))
            } else {
                target
            };
            self.nodes[node].link[ns] = Some(target);
            if target.crossing != node {
                self.nodes[target.crossing].link[target.slot as usize] =
                    Some(Incidence::new(node, ns as u8));
            }
        }
    }

    /// Deletes `deleted` and rejoins the loose ends. `through` pairs darts of
    /// deleted nodes: a strand arriving at one leaves by the other.
    pub fn reconnect(
        &mut self,
        deleted: &[usize],
        through: &BTreeMap<Incidence, Incidence>,
    ) -> Result<(), RewriteError> {
        let gone = |m: &PlanarMap, c: usize| deleted.contains(&c) || !m.nodes[c].alive;
        let mut used = std::collections::BTreeSet::new();
        let mut joins = Vec::new();
        for c in 0..self.nodes.len() {
            if gone(self, c) {
                continue;
            }
            for s in 0..4u8 {
                let start = Incidence::new(c, s);
                let mut cur = self.partner(start);
                if !gone(self, cur.crossing) {
                    continue;
                }
                let mut steps = 0;
                let end = loop {
                    let exit = *through.get(&cur).ok_or(RewriteError::InvalidSite([
                        cur.crossing,
                        cur.slot as usize,
                        0,
                        0,
                    ]))?;
                    used.insert(cur);
                    used.insert(exit);
                    let next = self.partner(exit);
                    if !gone(self, next.crossing) {
                        break next;
                    }
                    cur = next;
                    steps += 1;
                    if steps > 4 * self.nodes.len() {
                        return Err(RewriteError::EmptyComponent);
                    }
                };
                if start < end {
                    joins.push((start, end));
                }
            }
        }
        if through.keys().any(|k| !used.contains(k)) {
            // Some strand runs only through deleted crossings.
            return Err(RewriteError::EmptyComponent);
        }
        for &c in deleted {
            self.nodes[c].alive = false;
        }
        for (a, b) in joins {
            self.connect(a, b);
        }
        Ok(())
    }

    /// Connected pieces of the live nodes outside `excluded`, each sorted,
    /// ordered by first node.
    pub fn pieces_without(&self, excluded: &[usize]) -> Vec<Vec<usize>> {
        let mut piece = vec![usize::MAX; self.nodes.len()];
        for &c in excluded {
            piece[c] = usize::MAX - 1;
        }
        let mut out = Vec::new();
        for root in 0..self.nodes.len() {
            if !self.nodes[root].alive || piece[root] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![root];
            piece[root] = id;
            let mut i = 0;
            while i < members.len() {
                let c = members[i];
                i += 1;
                for s in 0..4u8 {
                    let p = self.partner(Incidence::new(c, s)).crossing;
                    if piece[p] == usize::MAX {
                        piece[p] = id;
                        members.push(p);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Builds the diagram, numbering live nodes in id order. Returns the old
    /// id → new id map.
    pub fn to_diagram(&self) -> Result<(LinkDiagram, Vec<Option<usize>>), RewriteError> {
        let mut remap = vec![None; self.nodes.len()];
        let live: Vec<usize> = (0..self.nodes.len())
            .filter(|&c| self.nodes[c].alive)
            .collect();
        if live.is_empty() {
            return Err(RewriteError::EmptyComponent);
        }
        for (i, &c) in live.iter().enumerate() {
            remap[c] = Some(i);
        }
        // Orient every strand, keeping any orientation already recorded.
        let mut incoming = vec![[false; 4]; self.nodes.len()];
        let mut done = vec![[false; 4]; self.nodes.len()];
        let mut label = vec![[0usize; 4]; self.nodes.len()];
        let mut next_label = 1;
        for &c in &live {
            for s in 0..4u8 {
                if done[c][s as usize] {
                    continue;
                }
                // Collect the component as (entry, exit) dart pairs.
                let start = Incidence::new(c, s);
                let mut passes = Vec::new();
                let mut cur = start;
                loop {
                    passes.push(cur);
                    let next = self.partner(Incidence::new(cur.crossing, cur.slot + 2));
                    if next == start {
                        break;
                    }
                    cur = next;
                    if passes.len() > 2 * self.nodes.len() {
                        return Err(RewriteError::InvalidSite([c, s as usize, 0, 0]));
                    }
                }
                let forward = passes
                    .iter()
                    .find_map(|&p| self.orientation(p))
                    .unwrap_or(true);
                if !forward {
                    // Walk the other way: enter at the opposite slots.
                    let mut rev: Vec<Incidence> = passes
                        .iter()
                        .map(|p| Incidence::new(p.crossing, p.slot + 2))
                        .collect();
                    rev.reverse();
                    passes = rev;
                }
                for &p in &passes {
                    let q = Incidence::new(p.crossing, p.slot + 2);
                    incoming[p.crossing][p.slot as usize] = true;
                    done[p.crossing][p.slot as usize] = true;
                    done[q.crossing][q.slot as usize] = true;
                }
                // Edge labels: the edge leaving pass i is labelled consecutively.
                for &p in &passes {
                    let out = Incidence::new(p.crossing, p.slot + 2);
                    let arrive = self.partner(out);
                    label[out.crossing][out.slot as usize] = next_label;
                    label[arrive.crossing][arrive.slot as usize] = next_label;
                    next_label += 1;
                }
            }
        }
        let mut tuples = Vec::with_capacity(live.len());
        let mut over_in = Vec::with_capacity(live.len());
        for &c in &live {
            let node = &self.nodes[c];
            let under_parity = if node.over_odd { 0 } else { 1 };
            let u = (0..4u8)
                .find(|&s| s % 2 == under_parity && incoming[c][s as usize])
                .expect("one under slot is incoming");
            let tuple: [usize; 4] = std::array::from_fn(|i| label[c][((u as usize) + i) % 4]);
            let o = if incoming[c][((u + 1) % 4) as usize] {
                1
            } else {
                3
            };
            tuples.push(tuple);
            over_in.push(o);
        }
        let d = LinkDiagram::from_raw(&RawDiagram::oriented(tuples, over_in))?;
        Ok((d, remap))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::notation::parse_pd;

    const FIGURE_EIGHT: &str = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";

    #[test]
    fn round_trip_preserves_structure() {
        let d = parse_pd(FIGURE_EIGHT).unwrap();
        let (back, remap) = PlanarMap::from_diagram(&d).to_diagram().unwrap();
        assert!(back.structurally_eq(&d));
        assert_eq!(remap, vec![Some(0), Some(1), Some(2), Some(3)]);
        for (a, b) in d.crossings().iter().zip(back.crossings()) {
            assert_eq!(a.sign(), b.sign());
        }
    }

    #[test]
    fn reverse_and_flip_everything_is_same_diagram_type() {
        // Reflecting the plane and swapping every crossing is a rotation in
        // space: the structural code of the result equals the original's
        // because the code ignores nothing but orientation and ids.
        let d = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]").unwrap();
        let mut m = PlanarMap::from_diagram(&d);
        for c in 0..m.len() {
            m.reverse(c);
            m.flip(c);
        }
        let (back, _) = m.to_diagram().unwrap();
        assert!(back.structurally_eq(&d));
        let mut m = PlanarMap::from_diagram(&d);
        for c in 0..m.len() {
            m.reverse(c);
        }
        let (mirror, _) = m.to_diagram().unwrap();
        assert!(!mirror.structurally_eq(&d));
    }

    #[test]
    fn deleting_a_kink() {
        // A trefoil with a kink spliced into one edge.
        let d = parse_pd("X[1,4,2,5] X[3,6,4,1] X[7,2,6,3] X[5,8,8,7]").unwrap();
        let kink = d.nugatory_crossings();
        assert_eq!(kink, vec![3]);
        let mut m = PlanarMap::from_diagram(&d);
        let through = (0..4u8)
            .map(|s| (Incidence::new(3, s), Incidence::new(3, s + 2)))
            .collect();
        m.reconnect(&[3], &through).unwrap();
        let (t, remap) = m.to_diagram().unwrap();
        assert_eq!(remap[3], None);
        let trefoil = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]").unwrap();
        assert!(t.structurally_eq(&trefoil));
    }
}
