//! The diagram of a fiber functor: pointed objects and their transition
//! order, plus connectivity of objects and coproduct decompositions.
//!
//! A pointed object is a pair `(a, A)` with `a` a fiber point of `A`; it
//! stands for one "approximation" of the formal limit object. The order
//! puts `(a, A) <= (b, B)` when some arrow `A -> B` carries `a` to `b`.
//! Under the connected-case axioms there is at most one such arrow, which
//! makes the diagram a thin preorder; nodes can still be mutually related
//! (isomorphic approximations), so antisymmetry holds only up to that
//! equivalence.

use std::collections::HashMap;

use crate::category::{ArrId, FiniteConcreteCategory, ObjId};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PointedObject {
    pub object: ObjId,
    pub point: usize,
}

/// Which pointed objects a diagram includes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagramRestriction {
    /// Every pointed object.
    All,
    /// Only points of finite objects (everything here is finite, so this
    /// matches `All`; kept for interface fidelity).
    Finite,
    /// Only points of nonempty connected objects.
    Connected,
}

#[derive(Debug, Clone)]
pub struct DiagramPoset {
    pub nodes: Vec<PointedObject>,
    /// Row-major n*n incidence: `leq[i*n + j]` iff node i <= node j.
    leq: Vec<bool>,
    /// Witness arrow for each related pair (i, j).
    witness: HashMap<(usize, usize), ArrId>,
    /// At most one arrow witnesses each relation (the thinness property
    /// that makes this a preorder of approximations).
    pub thin: bool,
}

impl DiagramPoset {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.nodes.len() + j]
    }

    /// The arrow carrying node i onto node j.
    pub fn witness(&self, i: usize, j: usize) -> Option<ArrId> {
        self.witness.get(&(i, j)).copied()
    }

    pub fn node_index(&self, p: PointedObject) -> Option<usize> {
        self.nodes.binary_search(&p).ok()
    }

    /// Two nodes are equivalent when each lies below the other
    /// (isomorphic approximations of the limit).
    pub fn equivalent(&self, i: usize, j: usize) -> bool {
        self.leq(i, j) && self.leq(j, i)
    }

    /// Greatest lower bound of two nodes: a common refinement below both
    /// that every other common refinement lies below. Returns the least
    /// node index among the equivalent maximal lower bounds.
    pub fn glb(&self, i: usize, j: usize) -> Option<usize> {
        let lower: Vec<usize> = (0..self.len())
            .filter(|&k| self.leq(k, i) && self.leq(k, j))
            .collect();
        lower
            .iter()
            .copied()
            .find(|&k| lower.iter().all(|&l| self.leq(l, k)))
    }

    /// Fold glb over several nodes.
    pub fn glb_many(&self, nodes: &[usize]) -> Option<usize> {
        let mut it = nodes.iter().copied();
        let first = it.next()?;
        it.try_fold(first, |acc, n| self.glb(acc, n))
    }

    /// Checks that every node of the diagram has some node of `subset`
    /// below it (cofinality by dominance).
    pub fn is_cofinal(&self, subset: &[usize]) -> bool {
        (0..self.len()).all(|i| subset.iter().any(|&s| self.leq(s, i)))
    }

    /// Nodes with no strictly smaller node below them.
    pub fn minimal_nodes(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| (0..self.len()).all(|j| !self.leq(j, i) || self.leq(i, j)))
            .collect()
    }
}

/// Builds the diagram of the fiber functor over the chosen objects.
pub fn diagram_poset(
    c: &FiniteConcreteCategory,
    restrict: DiagramRestriction,
) -> Result<DiagramPoset> {
    let connected = match restrict {
        DiagramRestriction::Connected => Some(connectivity_map(c)?),
        _ => None,
    };
    let mut nodes = Vec::new();
    for x in 0..c.objects().len() {
        if let Some(conn) = &connected {
            if !conn[x] {
                continue;
            }
        }
        for point in 0..c.fiber(x) {
            nodes.push(PointedObject { object: x, point });
        }
    }
    nodes.sort();
    let n = nodes.len();
    let mut leq = vec![false; n * n];
    let mut witness = HashMap::new();
    let mut thin = true;
    for (i, a) in nodes.iter().enumerate() {
        for (j, b) in nodes.iter().enumerate() {
            let mut count = 0;
            for &f in c.hom(a.object, b.object) {
                if c.arrow(f).fiber_map[a.point] == b.point {
                    if count == 0 {
                        witness.insert((i, j), f);
                    }
                    count += 1;
                }
            }
            if count > 0 {
                leq[i * n + j] = true;
            }
            if count > 1 {
                thin = false;
            }
        }
    }
    Ok(DiagramPoset {
        nodes,
        leq,
        witness,
        thin,
    })
}

/// Connectivity verdict for every object.
pub fn connectivity_map(c: &FiniteConcreteCategory) -> Result<Vec<bool>> {
    (0..c.objects().len()).map(|x| is_connected_object(c, x)).collect()
}

/// An object is (nonempty) connected when it admits no decomposition as a
/// categorical coproduct of two nonempty subobjects.
///
/// Decomposition candidates are searched through fiber partitions: a pair
/// of fiber-injective arrows with complementary images. Every candidate is
/// then certified by the categorical coproduct universal property, so a
/// "disconnected" verdict always carries a genuine witness.
pub fn is_connected_object(c: &FiniteConcreteCategory, x: ObjId) -> Result<bool> {
    if x >= c.objects().len() {
        return Err(Error::ObjectNotInCategory(x));
    }
    let fx = c.fiber(x);
    if fx == 0 {
        return Ok(false);
    }
    // fiber-injective in-arrows grouped by image bitset
    let mut by_image: HashMap<u64, Vec<ArrId>> = HashMap::new();
    debug_assert!(fx <= 64);
    for u in c.in_arrows(x) {
        let m = &c.arrow(u).fiber_map;
        if m.is_empty() || m.len() == fx {
            continue;
        }
        let mut mask = 0u64;
        let mut injective = true;
        for &v in m {
            if mask & (1 << v) != 0 {
                injective = false;
                break;
            }
            mask |= 1 << v;
        }
        if injective {
            by_image.entry(mask).or_default().push(u);
        }
    }
    let full: u64 = if fx == 64 { !0 } else { (1u64 << fx) - 1 };
    let mut images: Vec<&u64> = by_image.keys().collect();
    images.sort();
    for &mask in images {
        let complement = full & !mask;
        if complement <= mask {
            continue; // each unordered pair once
        }
        let Some(vs) = by_image.get(&complement) else {
            continue;
        };
        for &u in &by_image[&mask] {
            for &v in vs {
                if is_binary_coproduct(c, x, u, v)? {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Certifies that `(x; u: U -> x, v: V -> x)` is a coproduct: for every
/// object W the pairing `h -> (h . u, h . v)` is a bijection
/// `hom(x, W) -> hom(U, W) x hom(V, W)`.
pub fn is_binary_coproduct(c: &FiniteConcreteCategory, x: ObjId, u: ArrId, v: ArrId) -> Result<bool> {
    let us = c.arrow(u).src;
    let vs = c.arrow(v).src;
    let mut scratch = Vec::new();
    for w in 0..c.objects().len() {
        let expected = c.hom(us, w).len().checked_mul(c.hom(vs, w).len());
        if expected != Some(c.hom(x, w).len()) {
            return Ok(false);
        }
        let mut seen: HashMap<(ArrId, ArrId), ()> = HashMap::new();
        for &h in c.hom(x, w) {
            let hu = c.compose_scratch(h, u, &mut scratch)?;
            let hv = c.compose_scratch(h, v, &mut scratch)?;
            if seen.insert((hu, hv), ()).is_some() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Certifies an n-ary coproduct the same way.
pub fn is_coproduct(c: &FiniteConcreteCategory, x: ObjId, injections: &[ArrId]) -> Result<bool> {
    let mut scratch = Vec::new();
    for w in 0..c.objects().len() {
        let mut expected: usize = 1;
        for &m in injections {
            expected = match expected.checked_mul(c.hom(c.arrow(m).src, w).len()) {
                Some(e) => e,
                None => return Ok(false),
            };
        }
        if expected != c.hom(x, w).len() {
            return Ok(false);
        }
        let mut seen: HashMap<Vec<ArrId>, ()> = HashMap::new();
        for &h in c.hom(x, w) {
            let mut key = Vec::with_capacity(injections.len());
            for &m in injections {
                key.push(c.compose_scratch(h, m, &mut scratch)?);
            }
            if seen.insert(key, ()).is_some() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A connected-components decomposition: pairwise disjoint monos from
/// connected objects whose coproduct is `x`.
#[derive(Debug, Clone)]
pub struct Decomposition {
    /// (component object, mono into x) pairs.
    pub components: Vec<(ObjId, ArrId)>,
}

/// Decomposes `x` into connected subobjects with a certified coproduct.
/// The empty object decomposes into no components.
pub fn connected_decompose(c: &FiniteConcreteCategory, x: ObjId) -> Result<Decomposition> {
    if x >= c.objects().len() {
        return Err(Error::ObjectNotInCategory(x));
    }
    let fx = c.fiber(x);
    if fx == 0 {
        return Ok(Decomposition { components: vec![] });
    }
    let connected = connectivity_map(c)?;
    // candidate component embeddings: fiber-injective arrows from
    // connected objects, keyed by image mask
    let mut candidates: Vec<(u64, ObjId, ArrId)> = Vec::new();
    for u in c.in_arrows(x) {
        let a = c.arrow(u);
        if !connected[a.src] {
            continue;
        }
        let m = &a.fiber_map;
        let mut mask = 0u64;
        let mut injective = true;
        for &v in m {
            if mask & (1 << v) != 0 {
                injective = false;
                break;
            }
            mask |= 1 << v;
        }
        if injective && !m.is_empty() {
            candidates.push((mask, a.src, u));
        }
    }
    candidates.sort();
    let full: u64 = if fx == 64 { !0 } else { (1u64 << fx) - 1 };
    // exact cover by backtracking, always extending at the least uncovered
    // point so the search is deterministic
    fn cover(
        c: &FiniteConcreteCategory,
        x: ObjId,
        candidates: &[(u64, ObjId, ArrId)],
        covered: u64,
        full: u64,
        chosen: &mut Vec<(ObjId, ArrId)>,
    ) -> Result<Option<Vec<(ObjId, ArrId)>>> {
        if covered == full {
            let injections: Vec<ArrId> = chosen.iter().map(|&(_, m)| m).collect();
            if is_coproduct(c, x, &injections)? {
                return Ok(Some(chosen.clone()));
            }
            return Ok(None);
        }
        let next_point = (!covered & full).trailing_zeros() as u64;
        for &(mask, obj, arr) in candidates {
            if mask & covered != 0 || mask & (1 << next_point) == 0 {
                continue;
            }
            chosen.push((obj, arr));
            if let Some(result) = cover(c, x, candidates, covered | mask, full, chosen)? {
                return Ok(Some(result));
            }
            chosen.pop();
        }
        Ok(None)
    }
    let mut chosen = Vec::new();
    match cover(c, x, &candidates, 0, full, &mut chosen)? {
        Some(components) => Ok(Decomposition { components }),
        None => Err(Error::AxiomPrereqFailed(format!(
            "object {} admits no connected decomposition among materialized objects",
            c.object(x).name
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::is_transitive;
    use crate::algebra::symmetric;
    use crate::caps::Caps;
    use crate::category::build_gset_category;
    use std::sync::Arc;

    fn s3_category() -> crate::category::ActionCategory {
        let g = Arc::new(symmetric(3));
        let caps = Caps {
            arrows: 3000,
            ..Caps::default()
        };
        build_gset_category(&g, 6, &caps).unwrap()
    }

    #[test]
    fn connectivity_matches_orbit_count() {
        let built = s3_category();
        let c = &built.category;
        let conn = connectivity_map(c).unwrap();
        for (x, act) in built.actions.iter().enumerate() {
            let expected = act.points() > 0 && is_transitive(act).unwrap();
            assert_eq!(conn[x], expected, "connectivity of {}", c.object(x).name);
        }
    }

    #[test]
    fn decomposition_recovers_orbits() {
        let built = s3_category();
        let c = &built.category;
        for (x, act) in built.actions.iter().enumerate() {
            let d = connected_decompose(c, x).unwrap();
            let orbit_count = if act.points() == 0 {
                0
            } else {
                crate::action::orbits(act).unwrap().len()
            };
            assert_eq!(d.components.len(), orbit_count, "components of {}", c.object(x).name);
        }
    }

    #[test]
    fn empty_object_has_empty_decomposition() {
        let built = s3_category();
        let c = &built.category;
        let empty = (0..c.objects().len()).find(|&x| c.fiber(x) == 0).unwrap();
        assert!(connected_decompose(c, empty).unwrap().components.is_empty());
        assert!(!is_connected_object(c, empty).unwrap());
    }

    #[test]
    fn single_object_single_point_diagram() {
        // the one-object full subcategory on the terminal object
        let built = s3_category();
        let c = &built.category;
        let one = (0..c.objects().len())
            .find(|&x| c.fiber(x) == 1)
            .unwrap();
        let (sub, _) = c.full_subcategory("one", &[one], 1).unwrap();
        let d = diagram_poset(&sub, DiagramRestriction::All).unwrap();
        assert_eq!(d.len(), 1);
        assert!(d.leq(0, 0));
        assert!(d.thin);
    }

    #[test]
    fn connected_diagram_of_s3_is_thin_with_regular_bottom() {
        let built = s3_category();
        let c = &built.category;
        let d = diagram_poset(c, DiagramRestriction::Connected).unwrap();
        // nodes: one per point of each transitive object: 1+2+3+6 = 12
        assert_eq!(d.len(), 12);
        assert!(d.thin);
        // the regular object's pointed objects dominate everything
        let reg = built
            .actions
            .iter()
            .position(|a| a.points() == 6 && is_transitive(a).unwrap())
            .unwrap();
        let reg_nodes: Vec<usize> = (0..d.len())
            .filter(|&i| d.nodes[i].object == reg)
            .collect();
        assert!(d.is_cofinal(&reg_nodes));
        // minimal nodes are exactly the regular ones (it is the only
        // 6-point connected object)
        let minimal = d.minimal_nodes();
        assert_eq!(minimal, reg_nodes);
    }

    #[test]
    fn glb_exists_for_all_connected_pairs_of_s3() {
        let built = s3_category();
        let c = &built.category;
        let d = diagram_poset(c, DiagramRestriction::Connected).unwrap();
        for i in 0..d.len() {
            for j in 0..d.len() {
                assert!(
                    d.glb(i, j).is_some(),
                    "no meet for ({:?}, {:?})",
                    d.nodes[i],
                    d.nodes[j]
                );
            }
        }
    }
}
