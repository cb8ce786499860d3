//! Diagram rewrites: crossing-circle augmentation, deletion of encircled
//! twists, the half-twist move through a crossing circle, and removal of
//! nugatory twists; plus the pipeline `K → N → L` built from them.
//!
//! Volume statements attached to outputs are labels only. Nothing here
//! computes a volume.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::diagram::{Incidence, LinkDiagram};
use crate::error::RewriteError;
use crate::map::PlanarMap;
use crate::twist::{bigon_links, twist_regions, TwistRegion};

/// A crossing circle and the four crossings where it meets two strands.
///
/// `circle_crossings` is `[P1, P2, Q1, Q2]`: the circle runs
/// `P1 → P2 → Q2 → Q1 → P1`, passing over the strands at `P1`, `P2` (the side
/// facing the encircled twists) and under them at `Q1`, `Q2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossingCircleSite {
    /// Index into `LinkDiagram::strands()`.
    pub circle_component: usize,
    pub circle_crossings: [usize; 4],
    pub enclosed_region: Option<TwistRegion>,
}

/// How the simplicial volume of a rewrite's output compares to its input.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VolumeRelation {
    /// Equal simplicial volume (full twists and the half-twist move).
    Equal,
    /// The input's simplicial volume is at most the output's (drilling out a
    /// crossing circle).
    AtMost,
    /// The same link, so trivially equal.
    Isotopic,
}

#[derive(Debug, Clone, Serialize)]
pub struct VolumeChain {
    pub original_to_augmented: VolumeRelation,
    pub augmented_to_untwisted: VolumeRelation,
}

#[derive(Debug, Clone)]
pub struct PipelineResult {
    /// K, after nugatory twists are resolved.
    pub original: LinkDiagram,
    /// N: every long twist region encircled.
    pub augmented: LinkDiagram,
    /// L: encircled twists deleted.
    pub untwisted: LinkDiagram,
    /// Sites in N, one per augmented region.
    pub sites: Vec<CrossingCircleSite>,
    /// The same circles in L, with no enclosed region.
    pub untwisted_sites: Vec<CrossingCircleSite>,
    pub nugatory_resolutions: usize,
    pub volume_chain: VolumeChain,
}

impl PipelineResult {
    pub fn augmented_lengths(&self) -> Vec<usize> {
        self.sites
            .iter()
            .filter_map(|s| s.enclosed_region.as_ref().map(TwistRegion::length))
            .collect()
    }
}

/// Regions of length at least this are encircled by the pipeline.
pub const AUGMENT_THRESHOLD: usize = 4;

/// Circle geometry located in a diagram: for each of P1, P2, Q1, Q2 the slot
/// where the counterclockwise pattern of the site starts.
#[derive(Debug, Clone, Copy)]
struct SiteGeometry {
    p1: Incidence,
    p2: Incidence,
}

impl SiteGeometry {
    /// The strand darts at P1 and P2 that face the encircled twists.
    fn near_darts(&self) -> (Incidence, Incidence) {
        (
            Incidence::new(self.p1.crossing, self.p1.slot + 1),
            Incidence::new(self.p2.crossing, self.p2.slot + 1),
        )
    }
}

fn locate(d: &LinkDiagram, site: &CrossingCircleSite) -> Result<SiteGeometry, RewriteError> {
    let invalid = || RewriteError::InvalidSite(site.circle_crossings);
    let [p1, p2, q1, q2] = site.circle_crossings;
    let n = d.crossing_count();
    let ids = [p1, p2, q1, q2];
    if ids.iter().any(|&c| c >= n) || (1..4).any(|i| ids[..i].contains(&ids[i])) {
        return Err(invalid());
    }
    let at = |c: usize, s: u8| Incidence::new(c, s);
    for s0 in 0..4u8 {
        // P1: [→P2 circle, →near strand, →Q1 circle, →Q1 strand]
        let to_p2 = d.partner(at(p1, s0));
        if to_p2.crossing != p2 {
            continue;
        }
        // P2: [→Q2 circle, →near strand, →P1 circle, →Q2 strand]
        let t0 = (to_p2.slot + 2) % 4;
        // Q2: [→P2 circle, →P2 strand, →Q1 circle, →far strand]
        let to_q2 = d.partner(at(p2, t0));
        if to_q2.crossing != q2 {
            continue;
        }
        let u0 = to_q2.slot;
        // Q1: [→Q2 circle, →P1 strand, →P1 circle, →far strand]
        let to_q1 = d.partner(at(q2, u0 + 2));
        if to_q1.crossing != q1 {
            continue;
        }
        let v0 = to_q1.slot;
        let ok = d.partner(at(p2, t0 + 3)) == at(q2, u0 + 1)
            && d.partner(at(q1, v0 + 2)) == at(p1, s0 + 2)
            && d.partner(at(q1, v0 + 1)) == at(p1, s0 + 3)
            // Circle over at P1, P2 and under at Q1, Q2.
            && s0 % 2 == 1
            && t0 % 2 == 1
            && u0.is_multiple_of(2)
            && v0.is_multiple_of(2);
        if ok {
            return Ok(SiteGeometry {
                p1: at(p1, s0),
                p2: at(p2, t0),
            });
        }
    }
    Err(invalid())
}

fn component_of(d: &LinkDiagram, at: Incidence) -> usize {
    d.strands()
        .iter()
        .position(|strand| strand.iter().any(|&e| e == at || e.opposite() == at))
        .expect("every incidence lies on a strand")
}

fn circle_component(d: &LinkDiagram, geometry: &SiteGeometry) -> usize {
    component_of(d, geometry.p1)
}

/// Finds `region` among the diagram's twist regions, in either direction.
fn find_region(d: &LinkDiagram, region: &TwistRegion) -> Result<TwistRegion, RewriteError> {
    let regions = twist_regions(d)?;
    let mut reversed = region.crossing_ids.clone();
    reversed.reverse();
    regions
        .into_iter()
        .find(|r| r.crossing_ids == region.crossing_ids || r.crossing_ids == reversed)
        .ok_or_else(|| RewriteError::RegionNotInDiagram(region.crossing_ids.clone()))
}

fn canonical_rank(d: &LinkDiagram) -> Vec<usize> {
    let mut rank = vec![0; d.crossing_count()];
    for (i, c) in d.canonical_order().into_iter().enumerate() {
        rank[c] = i;
    }
    rank
}

/// Corner of `crossing` whose bigon leads to `neighbour` along the region.
fn chain_corner(d: &LinkDiagram, crossing: usize, neighbour: usize) -> Result<u8, RewriteError> {
    let links = bigon_links(d)?;
    (0..4u8)
        .find(|&k| matches!(links[crossing][k as usize], Some((c, _)) if c == neighbour))
        .ok_or_else(|| RewriteError::RegionNotInDiagram(vec![crossing, neighbour]))
}

/// The outer corner at the end `end` of `ids` (which starts at `end`): the
/// corner opposite the chain bigon, or corner 2 for a lone crossing.
fn outer_corner(d: &LinkDiagram, ids: &[usize]) -> Result<u8, RewriteError> {
    if ids.len() == 1 {
        Ok(2)
    } else {
        Ok((chain_corner(d, ids[0], ids[1])? + 2) % 4)
    }
}

/// Encircles a non-cyclic twist region with a new unknotted component next
/// to the region's end of lowest canonical rank. Existing crossing ids are
/// kept; the circle's crossings are appended.
pub fn augment_region(
    diagram: &LinkDiagram,
    region: &TwistRegion,
) -> Result<(LinkDiagram, CrossingCircleSite), RewriteError> {
    if region.cyclic {
        return Err(RewriteError::CyclicRegion(region.crossing_ids.clone()));
    }
    let found = find_region(diagram, region)?;
    if found.cyclic {
        return Err(RewriteError::CyclicRegion(found.crossing_ids));
    }
    let rank = canonical_rank(diagram);
    let (a, b) = found.ends();
    let mut ids = found.crossing_ids.clone();
    if rank[b] < rank[a] {
        ids.reverse();
    }
    let end = ids[0];
    let o = outer_corner(diagram, &ids)?;

    let mut m = PlanarMap::from_diagram(diagram);
    let n = m.len();
    let (p1, p2, q1, q2) = (
        m.add_node(false),
        m.add_node(false),
        m.add_node(true),
        m.add_node(true),
    );
    debug_assert_eq!((p1, q2), (n, n + 3));
    let at = Incidence::new;
    for (dart, p, q) in [(at(end, o), p1, q1), (at(end, o + 1), p2, q2)] {
        let far = m.partner(dart);
        m.connect(dart, at(p, 1));
        m.connect(at(p, 3), at(q, 1));
        m.connect(at(q, 3), far);
        let leaves_end = m.orientation(dart).map(|incoming| !incoming);
        m.set_orientation(at(p, 1), leaves_end);
        m.set_orientation(at(q, 1), leaves_end);
    }
    m.connect(at(p1, 0), at(p2, 2));
    m.connect(at(p2, 0), at(q2, 0));
    m.connect(at(q2, 2), at(q1, 0));
    m.connect(at(q1, 2), at(p1, 2));
    let (augmented, _) = m.to_diagram()?;

    let mut site = CrossingCircleSite {
        circle_component: 0,
        circle_crossings: [p1, p2, q1, q2],
        enclosed_region: Some(TwistRegion {
            crossing_ids: ids,
            cyclic: false,
        }),
    };
    let geometry = locate(&augmented, &site)?;
    site.circle_component = circle_component(&augmented, &geometry);
    Ok((augmented, site))
}

fn remap_site(
    d: &LinkDiagram,
    site: &CrossingCircleSite,
    remap: &[Option<usize>],
    region: Option<TwistRegion>,
) -> Result<CrossingCircleSite, RewriteError> {
    let mut circle = [0; 4];
    for (slot, &c) in circle.iter_mut().zip(&site.circle_crossings) {
        *slot = remap
            .get(c)
            .copied()
            .flatten()
            .ok_or(RewriteError::InvalidSite(site.circle_crossings))?;
    }
    let mut out = CrossingCircleSite {
        circle_component: 0,
        circle_crossings: circle,
        enclosed_region: region,
    };
    let geometry = locate(d, &out)?;
    out.circle_component = circle_component(d, &geometry);
    Ok(out)
}

/// Deletes the twist region enclosed by `site`, joining its strands as two
/// parallel arcs through the circle.
pub fn remove_encircled_twists(
    diagram: &LinkDiagram,
    site: &CrossingCircleSite,
) -> Result<LinkDiagram, RewriteError> {
    remove_encircled_twists_tracked(diagram, site).map(|(d, _, _)| d)
}

/// As `remove_encircled_twists`, also returning the site in the new diagram
/// (with no enclosed region) and the old → new crossing id map.
pub fn remove_encircled_twists_tracked(
    diagram: &LinkDiagram,
    site: &CrossingCircleSite,
) -> Result<(LinkDiagram, CrossingCircleSite, Vec<Option<usize>>), RewriteError> {
    let region = site
        .enclosed_region
        .as_ref()
        .ok_or(RewriteError::MissingProvenance)?;
    let geometry = locate(diagram, site)?;
    let found = find_region(diagram, region)?;
    if found
        .crossing_ids
        .iter()
        .any(|c| site.circle_crossings.contains(c))
    {
        return Err(RewriteError::InvalidSite(site.circle_crossings));
    }
    let (near_p1, near_p2) = geometry.near_darts();
    let first = diagram.partner(near_p1);
    let second = diagram.partner(near_p2);
    let mut ids = found.crossing_ids.clone();
    if ids[0] != first.crossing {
        ids.reverse();
    }
    if ids[0] != first.crossing
        || second.crossing != first.crossing
        || second.slot != (first.slot + 1) % 4
    {
        return Err(RewriteError::InvalidSite(site.circle_crossings));
    }
    let (far_first, far_second) = if ids.len() == 1 {
        (first.slot + 2, first.slot + 3)
    } else {
        let far = ids[ids.len() - 1];
        let j = chain_corner(diagram, far, ids[ids.len() - 2])?;
        (j + 2, j + 3)
    };
    let far = *ids.last().unwrap();
    let far_first = Incidence::new(far, far_first);
    let far_second = Incidence::new(far, far_second);
    let through: BTreeMap<Incidence, Incidence> = [
        (first, far_second),
        (far_second, first),
        (second, far_first),
        (far_first, second),
    ]
    .into_iter()
    .collect();

    let mut m = PlanarMap::from_diagram(diagram);
    m.reconnect(&ids, &through)?;
    let (out, remap) = m.to_diagram()?;
    let new_site = remap_site(&out, site, &remap, None)?;
    Ok((out, new_site, remap))
}

/// Inserts (`insert = true`) or removes one crossing between the two strands
/// just inside the crossing circle. The result has the same simplicial
/// volume as the input; see `VolumeRelation::Equal`.
pub fn half_twist_toggle(
    diagram: &LinkDiagram,
    site: &CrossingCircleSite,
    insert: bool,
) -> Result<LinkDiagram, RewriteError> {
    half_twist_toggle_tracked(diagram, site, insert).map(|(d, _)| d)
}

/// As `half_twist_toggle`, also returning the site in the new diagram.
pub fn half_twist_toggle_tracked(
    diagram: &LinkDiagram,
    site: &CrossingCircleSite,
    insert: bool,
) -> Result<(LinkDiagram, CrossingCircleSite), RewriteError> {
    if !diagram.is_connected() {
        return Err(RewriteError::Disconnected(diagram.pieces()));
    }
    let geometry = locate(diagram, site)?;
    let (near_p1, near_p2) = geometry.near_darts();
    let mut m = PlanarMap::from_diagram(diagram);
    let at = Incidence::new;
    if insert {
        let a = m.partner(near_p1);
        let b = m.partner(near_p2);
        let x = m.add_node(true);
        m.connect(at(x, 0), near_p1);
        m.connect(at(x, 1), near_p2);
        if a == near_p2 {
            m.connect(at(x, 2), at(x, 3));
        } else {
            m.connect(at(x, 2), b);
            m.connect(at(x, 3), a);
        }
        m.set_orientation(at(x, 0), m.orientation(near_p1).map(|inc| !inc));
        m.set_orientation(at(x, 1), m.orientation(near_p2).map(|inc| !inc));
        let (out, remap) = m.to_diagram()?;
        let new_site = remap_site(&out, site, &remap, site.enclosed_region.clone())?;
        Ok((out, new_site))
    } else {
        let a = m.partner(near_p1);
        let b = m.partner(near_p2);
        if a.crossing != b.crossing
            || b.slot != (a.slot + 1) % 4
            || site.circle_crossings.contains(&a.crossing)
        {
            return Err(RewriteError::NoAdjacentHalfTwist);
        }
        let x = a.crossing;
        let through: BTreeMap<Incidence, Incidence> = [
            (at(x, a.slot), at(x, a.slot + 3)),
            (at(x, a.slot + 3), at(x, a.slot)),
            (at(x, a.slot + 1), at(x, a.slot + 2)),
            (at(x, a.slot + 2), at(x, a.slot + 1)),
        ]
        .into_iter()
        .collect();
        m.reconnect(&[x], &through)?;
        let (out, remap) = m.to_diagram()?;
        let region = site.enclosed_region.as_ref().and_then(|r| {
            let ids: Vec<usize> = r.crossing_ids.iter().filter_map(|&c| remap[c]).collect();
            (!ids.is_empty()).then_some(TwistRegion {
                crossing_ids: ids,
                cyclic: false,
            })
        });
        let new_site = remap_site(&out, site, &remap, region)?;
        Ok((out, new_site))
    }
}

/// Removes nugatory twists until the diagram is reduced; returns the number
/// of twists removed.
///
/// Each step deletes a twist region made of nugatory crossings, joining the
/// strands straight through. When an odd number of crossings goes, the side
/// away from the canonical anchor is turned over (planar reflection plus
/// crossing change), which is the rotation that undoes the half twist.
pub fn resolve_nugatory(diagram: &LinkDiagram) -> Result<(LinkDiagram, usize), RewriteError> {
    let mut current = diagram.clone();
    let mut count = 0;
    loop {
        let (reduced, nugatory) = current.is_reduced();
        if reduced {
            return Ok((current, count));
        }
        let target = match twist_regions(&current) {
            Ok(regions) => regions
                .into_iter()
                .find(|r| !r.cyclic && r.crossing_ids.iter().all(|c| nugatory.contains(c)))
                .map(|r| r.crossing_ids),
            Err(_) => None,
        }
        .unwrap_or_else(|| vec![nugatory[0]]);
        if target.len() == current.crossing_count() {
            return Err(RewriteError::EmptyComponent);
        }
        let rank = canonical_rank(&current);
        let mut m = PlanarMap::from_diagram(&current);
        let sides = m.pieces_without(&target);
        let through: BTreeMap<Incidence, Incidence> = target
            .iter()
            .flat_map(|&c| (0..4u8).map(move |s| (Incidence::new(c, s), Incidence::new(c, s + 2))))
            .collect();
        m.reconnect(&target, &through)?;
        if target.len() % 2 == 1 && sides.len() > 1 {
            let anchor = sides
                .iter()
                .flatten()
                .copied()
                .min_by_key(|&c| rank[c])
                .expect("sides are non-empty");
            for side in sides.iter().filter(|s| !s.contains(&anchor)) {
                for &c in side {
                    m.reverse(c);
                    m.flip(c);
                }
            }
        }
        current = m.to_diagram()?.0;
        count += 1;
    }
}

/// Resolves nugatory twists, encircles every twist region with at least
/// `AUGMENT_THRESHOLD` crossings, then deletes the encircled twists.
pub fn fully_augmented(diagram: &LinkDiagram) -> Result<PipelineResult, RewriteError> {
    if !diagram.is_connected() {
        return Err(RewriteError::Disconnected(diagram.pieces()));
    }
    let (original, nugatory_resolutions) = resolve_nugatory(diagram)?;
    let long: Vec<TwistRegion> = twist_regions(&original)?
        .into_iter()
        .filter(|r| r.length() >= AUGMENT_THRESHOLD)
        .collect();
    if let Some(r) = long.iter().find(|r| r.cyclic) {
        return Err(RewriteError::CyclicRegion(r.crossing_ids.clone()));
    }
    // Augmentation appends crossings, so region ids stay valid throughout.
    let mut augmented = original.clone();
    let mut sites = Vec::with_capacity(long.len());
    for region in &long {
        let (next, site) = augment_region(&augmented, region)?;
        augmented = next;
        sites.push(site);
    }
    // Component indices may shift as later circles are added.
    for site in &mut sites {
        let geometry = locate(&augmented, site)?;
        site.circle_component = circle_component(&augmented, &geometry);
    }
    let mut untwisted = augmented.clone();
    let mut pending = sites.clone();
    let mut untwisted_sites = Vec::with_capacity(sites.len());
    while !pending.is_empty() {
        let site = pending.remove(0);
        let (next, done, remap) = remove_encircled_twists_tracked(&untwisted, &site)?;
        untwisted = next;
        for other in &mut pending {
            let region = other.enclosed_region.as_ref().map(|r| TwistRegion {
                crossing_ids: r
                    .crossing_ids
                    .iter()
                    .map(|&c| remap[c].expect("disjoint"))
                    .collect(),
                cyclic: false,
            });
            *other = remap_site(&untwisted, other, &remap, region)?;
        }
        for prev in &mut untwisted_sites {
            *prev = remap_site(&untwisted, prev, &remap, None)?;
        }
        untwisted_sites.push(done);
    }
    for site in &mut untwisted_sites {
        let geometry = locate(&untwisted, site)?;
        site.circle_component = circle_component(&untwisted, &geometry);
    }
    Ok(PipelineResult {
        original,
        augmented,
        untwisted,
        sites,
        untwisted_sites,
        nugatory_resolutions,
        volume_chain: VolumeChain {
            original_to_augmented: VolumeRelation::AtMost,
            augmented_to_untwisted: VolumeRelation::Equal,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::notation::{parse_dt, parse_pd};

    const TREFOIL: &str = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
    const FIGURE_EIGHT: &str = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";

    fn region_of_length(d: &LinkDiagram, len: usize) -> TwistRegion {
        twist_regions(d)
            .unwrap()
            .into_iter()
            .find(|r| r.length() == len)
            .unwrap()
    }

    #[test]
    fn augment_figure_eight() {
        let d = parse_pd(FIGURE_EIGHT).unwrap();
        let r = region_of_length(&d, 2);
        let (n, site) = augment_region(&d, &r).unwrap();
        assert_eq!((n.crossing_count(), n.link_components()), (8, 2));
        assert!(n.validate().ok);
        assert_eq!(site.circle_crossings, [4, 5, 6, 7]);
        // The circle passes through exactly its four crossings.
        let circle = &n.strands()[site.circle_component];
        let mut through: Vec<usize> = circle.iter().map(|i| i.crossing).collect();
        through.sort_unstable();
        assert_eq!(through, vec![4, 5, 6, 7]);
        let l = remove_encircled_twists(&n, &site).unwrap();
        assert_eq!((l.crossing_count(), l.link_components()), (6, 2));
    }

    #[test]
    fn cyclic_region_is_refused() {
        let d = parse_pd(TREFOIL).unwrap();
        let r = twist_regions(&d).unwrap().remove(0);
        assert!(matches!(
            augment_region(&d, &r),
            Err(RewriteError::CyclicRegion(_))
        ));
    }

    #[test]
    fn unknown_region_is_refused() {
        let d = parse_pd(FIGURE_EIGHT).unwrap();
        let r = TwistRegion {
            crossing_ids: vec![0, 2],
            cyclic: false,
        };
        assert!(matches!(
            augment_region(&d, &r),
            Err(RewriteError::RegionNotInDiagram(_))
        ));
    }

    #[test]
    fn removal_needs_provenance() {
        let d = parse_pd(FIGURE_EIGHT).unwrap();
        let (n, site) = augment_region(&d, &region_of_length(&d, 2)).unwrap();
        let (l, done, _) = remove_encircled_twists_tracked(&n, &site).unwrap();
        assert_eq!(done.enclosed_region, None);
        assert_eq!(
            remove_encircled_twists(&l, &done),
            Err(RewriteError::MissingProvenance)
        );
    }

    #[test]
    fn six_one_pipeline() {
        let d = parse_dt("4 8 12 10 2 6").unwrap();
        let mut lengths: Vec<usize> = twist_regions(&d)
            .unwrap()
            .iter()
            .map(|r| r.length())
            .collect();
        lengths.sort_unstable();
        assert_eq!(lengths, vec![2, 4]);
        let p = fully_augmented(&d).unwrap();
        assert_eq!(p.sites.len(), 1);
        assert_eq!(
            (p.augmented.crossing_count(), p.augmented.link_components()),
            (10, 2)
        );
        assert_eq!(
            (p.untwisted.crossing_count(), p.untwisted.link_components()),
            (6, 2)
        );
    }

    #[test]
    fn toggle_round_trip() {
        let d = parse_pd(FIGURE_EIGHT).unwrap();
        let (n, site) = augment_region(&d, &region_of_length(&d, 2)).unwrap();
        let (m, s2) = half_twist_toggle_tracked(&n, &site, true).unwrap();
        assert_eq!(m.crossing_count(), 9);
        let back = half_twist_toggle(&m, &s2, false).unwrap();
        assert!(back.structurally_eq(&n));
    }

    #[test]
    fn toggle_remove_lone_crossing() {
        // 6_2 has twist regions of lengths 3, 2 and 1.
        let d = parse_dt("4 8 10 12 2 6").unwrap();
        let r = twist_regions(&d)
            .unwrap()
            .into_iter()
            .find(|r| r.length() == 1)
            .unwrap();
        let (n, site) = augment_region(&d, &r).unwrap();
        let removed = half_twist_toggle(&n, &site, false).unwrap();
        assert_eq!(removed.crossing_count(), n.crossing_count() - 1);
        let (l, s3) = half_twist_toggle_tracked(&n, &site, false).unwrap();
        assert_eq!(s3.enclosed_region, None);
        assert_eq!(
            half_twist_toggle(&l, &s3, false),
            Err(RewriteError::NoAdjacentHalfTwist)
        );
    }

    #[test]
    fn trefoil_is_fixed_point() {
        let d = parse_pd(TREFOIL).unwrap();
        let (r, k) = resolve_nugatory(&d).unwrap();
        assert_eq!(k, 0);
        assert!(r.structurally_eq(&d));
    }

    #[test]
    fn kinked_trefoil_resolves() {
        let d = parse_pd("X[1,4,2,5] X[3,6,4,1] X[7,2,6,3] X[5,8,8,7]").unwrap();
        let (r, k) = resolve_nugatory(&d).unwrap();
        assert_eq!(k, 1);
        assert!(r.structurally_eq(&parse_pd(TREFOIL).unwrap()));
    }

    #[test]
    fn lone_kink_has_nothing_left() {
        let d = parse_pd("X[1,2,2,1]").unwrap();
        assert_eq!(resolve_nugatory(&d), Err(RewriteError::EmptyComponent));
    }
}
