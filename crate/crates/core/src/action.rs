//! Finite left actions of groups and monoids on finite point sets.
//!
//! These are the concrete models everything else is compared against:
//! transitive actions realize the subgroup side of the Galois
//! correspondence, and the category of all capped actions is the target
//! of the reconstruction theorems.
//!
//! All actions are left actions stored as full tables. Monoid actors are
//! carried by the same type; operations that only make sense for groups
//! fail loudly instead of computing something else.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::algebra::{self, FiniteGroup, FiniteMonoid, Subgroup};
use crate::caps::Caps;
use crate::error::{Error, Result};

/// The acting structure of a [`GAction`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Actor {
    Group(Arc<FiniteGroup>),
    Monoid(Arc<FiniteMonoid>),
}

impl Actor {
    pub fn size(&self) -> usize {
        match self {
            Actor::Group(g) => g.size(),
            Actor::Monoid(m) => m.size(),
        }
    }

    pub fn identity(&self) -> usize {
        match self {
            Actor::Group(g) => g.identity(),
            Actor::Monoid(m) => m.identity(),
        }
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        match self {
            Actor::Group(g) => g.mul(a, b),
            Actor::Monoid(m) => m.mul(a, b),
        }
    }

    pub fn name(&self) -> &str {
        match self {
            Actor::Group(g) => g.name(),
            Actor::Monoid(m) => &m.name,
        }
    }

    pub fn as_group(&self) -> Result<&Arc<FiniteGroup>> {
        match self {
            Actor::Group(g) => Ok(g),
            Actor::Monoid(_) => Err(Error::MonoidActorUnsupported),
        }
    }

    /// Same actor, compared structurally (pointer equality short-circuits).
    pub fn same_as(&self, other: &Actor) -> bool {
        match (self, other) {
            (Actor::Group(a), Actor::Group(b)) => Arc::ptr_eq(a, b) || a == b,
            (Actor::Monoid(a), Actor::Monoid(b)) => Arc::ptr_eq(a, b) || a == b,
            _ => false,
        }
    }
}

/// A finite left action: a total table `(g, x) -> g.x` satisfying the
/// identity and compatibility laws.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GAction {
    pub name: String,
    actor: Actor,
    points: usize,
    /// Row-major: `act[g * points + x]`.
    act: Vec<usize>,
}

impl GAction {
    pub fn new(name: impl Into<String>, actor: Actor, points: usize, act: Vec<usize>) -> Result<Self> {
        if act.len() != actor.size() * points {
            return Err(Error::BadTableShape {
                expected: actor.size() * points,
                got: act.len(),
            });
        }
        for &v in &act {
            if v >= points {
                return Err(Error::EntryOutOfRange(v));
            }
        }
        let a = GAction {
            name: name.into(),
            actor,
            points,
            act,
        };
        let e = a.actor.identity();
        for x in 0..points {
            if a.apply(e, x) != x {
                return Err(Error::NotAnAction(format!("identity moves point {x}")));
            }
        }
        for g in 0..a.actor.size() {
            for h in 0..a.actor.size() {
                let gh = a.actor.mul(g, h);
                for x in 0..points {
                    if a.apply(gh, x) != a.apply(g, a.apply(h, x)) {
                        return Err(Error::NotAnAction(format!(
                            "compatibility fails at (g={g}, h={h}, x={x})"
                        )));
                    }
                }
            }
        }
        Ok(a)
    }

    pub fn actor(&self) -> &Actor {
        &self.actor
    }

    pub fn points(&self) -> usize {
        self.points
    }

    #[inline]
    pub fn apply(&self, g: usize, x: usize) -> usize {
        self.act[g * self.points + x]
    }

    pub fn table(&self) -> &[usize] {
        &self.act
    }

    /// The trivial action on `n` points.
    pub fn trivial(actor: Actor, n: usize) -> GAction {
        let size = actor.size();
        let mut act = vec![0; size * n];
        for g in 0..size {
            for x in 0..n {
                act[g * n + x] = x;
            }
        }
        GAction {
            name: format!("trivial{n}"),
            actor,
            points: n,
            act,
        }
    }

    /// The action of a group on itself by left translation: the free
    /// action on one generator.
    pub fn regular(group: Arc<FiniteGroup>) -> GAction {
        let n = group.size();
        let mut act = vec![0; n * n];
        for g in 0..n {
            for x in 0..n {
                act[g * n + x] = group.mul(g, x);
            }
        }
        GAction {
            name: format!("{}-regular", group.name()),
            actor: Actor::Group(group),
            points: n,
            act,
        }
    }

    /// A monoid acting on itself by left translation.
    pub fn regular_monoid(monoid: Arc<FiniteMonoid>) -> GAction {
        let n = monoid.size();
        let mut act = vec![0; n * n];
        for g in 0..n {
            for x in 0..n {
                act[g * n + x] = monoid.mul(g, x);
            }
        }
        GAction {
            name: format!("{}-regular", monoid.name),
            actor: Actor::Monoid(monoid),
            points: n,
            act,
        }
    }

    /// Disjoint union of two actions over the same actor.
    pub fn disjoint_union(&self, other: &GAction) -> Result<GAction> {
        if !self.actor.same_as(&other.actor) {
            return Err(Error::ActorMismatch);
        }
        let n = self.points + other.points;
        let size = self.actor.size();
        let mut act = vec![0; size * n];
        for g in 0..size {
            for x in 0..self.points {
                act[g * n + x] = self.apply(g, x);
            }
            for x in 0..other.points {
                act[g * n + self.points + x] = other.apply(g, x) + self.points;
            }
        }
        Ok(GAction {
            name: format!("{}+{}", self.name, other.name),
            actor: self.actor.clone(),
            points: n,
            act,
        })
    }

    /// Relabels points by a permutation (point `x` becomes `perm[x]`).
    pub fn relabel_points(&self, perm: &[usize]) -> Result<GAction> {
        if perm.len() != self.points {
            return Err(Error::BadTableShape {
                expected: self.points,
                got: perm.len(),
            });
        }
        let size = self.actor.size();
        let mut act = vec![0; size * self.points];
        for g in 0..size {
            for x in 0..self.points {
                act[g * self.points + perm[x]] = perm[self.apply(g, x)];
            }
        }
        Ok(GAction {
            name: format!("{}~", self.name),
            actor: self.actor.clone(),
            points: self.points,
            act,
        })
    }
}

/// An equivariant map between two actions of the same actor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivariantMap {
    pub source: Arc<GAction>,
    pub target: Arc<GAction>,
    map: Vec<usize>,
}

impl EquivariantMap {
    pub fn new(source: Arc<GAction>, target: Arc<GAction>, map: Vec<usize>) -> Result<Self> {
        if !source.actor().same_as(target.actor()) {
            return Err(Error::ActorMismatch);
        }
        if map.len() != source.points() {
            return Err(Error::BadTableShape {
                expected: source.points(),
                got: map.len(),
            });
        }
        for &v in &map {
            if v >= target.points() {
                return Err(Error::EntryOutOfRange(v));
            }
        }
        for g in 0..source.actor().size() {
            for x in 0..source.points() {
                if map[source.apply(g, x)] != target.apply(g, map[x]) {
                    return Err(Error::NotEquivariant { g, x });
                }
            }
        }
        Ok(EquivariantMap { source, target, map })
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn is_bijective(&self) -> bool {
        if self.source.points() != self.target.points() {
            return false;
        }
        let mut seen = vec![false; self.target.points()];
        for &v in &self.map {
            if seen[v] {
                return false;
            }
            seen[v] = true;
        }
        true
    }

    pub fn is_surjective(&self) -> bool {
        let seen: BTreeSet<usize> = self.map.iter().copied().collect();
        seen.len() == self.target.points()
    }

    /// Inverse of a bijective equivariant map.
    pub fn inverse(&self) -> Option<EquivariantMap> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0; self.map.len()];
        for (x, &y) in self.map.iter().enumerate() {
            inv[y] = x;
        }
        Some(EquivariantMap {
            source: self.target.clone(),
            target: self.source.clone(),
            map: inv,
        })
    }
}

/// Orbit partition of a group action. Parts are sorted internally and by
/// least element, so the output is deterministic.
pub fn orbits(a: &GAction) -> Result<Vec<Vec<usize>>> {
    let group = a.actor().as_group()?;
    let mut seen = vec![false; a.points()];
    let mut parts = Vec::new();
    for x in 0..a.points() {
        if seen[x] {
            continue;
        }
        let mut orbit: BTreeSet<usize> = BTreeSet::new();
        for g in 0..group.size() {
            orbit.insert(a.apply(g, x));
        }
        for &y in &orbit {
            seen[y] = true;
        }
        parts.push(orbit.into_iter().collect());
    }
    Ok(parts)
}

pub fn is_transitive(a: &GAction) -> Result<bool> {
    Ok(a.points() > 0 && orbits(a)?.len() == 1)
}

/// The stabilizer subgroup `{g : g.x = x}`.
pub fn stabilizer(a: &GAction, x: usize) -> Result<Subgroup> {
    let group = a.actor().as_group()?;
    if x >= a.points() {
        return Err(Error::PointOutOfRange {
            point: x,
            points: a.points(),
        });
    }
    let members: Vec<usize> = (0..group.size()).filter(|&g| a.apply(g, x) == x).collect();
    Subgroup::new(group, members)
}

/// The action of `g` on left cosets of `h`. Point 0 is the coset `h`
/// itself; the rest are ordered by least member.
pub fn coset_action(g: &Arc<FiniteGroup>, h: &Subgroup) -> Result<GAction> {
    Subgroup::new(g, h.members().iter().copied())
        .map_err(|_| Error::NotASubgroup("coset_action argument".into()))?;
    let n = g.size();
    let mut coset_of = vec![usize::MAX; n];
    let mut cosets: Vec<Vec<usize>> = Vec::new();
    // identity coset first
    let order: Vec<usize> = std::iter::once(g.identity())
        .chain((0..n).filter(|&x| x != g.identity()))
        .collect();
    for &rep in &order {
        if coset_of[rep] != usize::MAX {
            continue;
        }
        let mut coset: Vec<usize> = h.members().iter().map(|&x| g.mul(rep, x)).collect();
        coset.sort_unstable();
        let idx = cosets.len();
        for &m in &coset {
            coset_of[m] = idx;
        }
        cosets.push(coset);
    }
    let points = cosets.len();
    let mut act = vec![0; n * points];
    for a in 0..n {
        for (ci, coset) in cosets.iter().enumerate() {
            act[a * points + ci] = coset_of[g.mul(a, coset[0])];
        }
    }
    GAction::new(
        format!("{}/H{}", g.name(), h.len()),
        Actor::Group(g.clone()),
        points,
        act,
    )
}

/// One coset action per conjugacy class of subgroups: a complete,
/// pairwise non-isomorphic list of the transitive actions of `g`.
/// Ordered by point count, then by the class representative.
pub fn classify_transitive(g: &Arc<FiniteGroup>, caps: &Caps) -> Result<Vec<GAction>> {
    let classes = algebra::conjugacy_classes_of_subgroups(g, caps)?;
    let mut reps: Vec<&Subgroup> = classes.iter().map(|c| &c[0]).collect();
    // larger subgroup = smaller coset space first
    reps.sort_by(|a, b| {
        (b.len(), a.members()).cmp(&(a.len(), b.members()))
    });
    reps.iter().map(|h| coset_action(g, h)).collect()
}

/// All equivariant maps `e1 -> e2`, enumerated deterministically
/// (lexicographically in the map table).
///
/// Backtracking with forced propagation: once a point's image is chosen,
/// the whole reachable set is determined. This works uniformly for group
/// and monoid actors.
pub fn hom_actions(e1: &Arc<GAction>, e2: &Arc<GAction>) -> Result<Vec<EquivariantMap>> {
    if !e1.actor().same_as(e2.actor()) {
        return Err(Error::ActorMismatch);
    }
    let mut out = Vec::new();
    let mut partial = vec![usize::MAX; e1.points()];
    search_homs(e1, e2, &mut partial, &mut out, &mut |_| true);
    out.sort_by(|a, b| a.map().cmp(b.map()));
    Ok(out)
}

/// Exhaustive bijective-equivariant search; returns the lexicographically
/// least witness.
pub fn action_isomorphic(e1: &Arc<GAction>, e2: &Arc<GAction>) -> Result<Option<EquivariantMap>> {
    if !e1.actor().same_as(e2.actor()) {
        return Err(Error::ActorMismatch);
    }
    if e1.points() != e2.points() {
        return Ok(None);
    }
    let mut found: Vec<EquivariantMap> = Vec::new();
    let mut partial = vec![usize::MAX; e1.points()];
    search_homs(e1, e2, &mut partial, &mut found, &mut |m: &[usize]| {
        // keep only injective-so-far assignments
        let mut seen = vec![false; m.len()];
        for &v in m.iter() {
            if v == usize::MAX {
                continue;
            }
            if seen[v] {
                return false;
            }
            seen[v] = true;
        }
        true
    });
    Ok(found.into_iter().find(EquivariantMap::is_bijective))
}

/// Core backtracking search. `filter` prunes partial assignments.
fn search_homs(
    e1: &Arc<GAction>,
    e2: &Arc<GAction>,
    partial: &mut Vec<usize>,
    out: &mut Vec<EquivariantMap>,
    filter: &mut dyn FnMut(&[usize]) -> bool,
) {
    // find first unassigned point
    let free = partial.iter().position(|&v| v == usize::MAX);
    let Some(x) = free else {
        if let Ok(m) = EquivariantMap::new(e1.clone(), e2.clone(), partial.clone()) {
            out.push(m);
        }
        return;
    };
    'cand: for y in 0..e2.points() {
        let mut next = partial.clone();
        next[x] = y;
        // propagate: for each actor element g and each assigned point p,
        // the image of g.p is forced to g.f(p)
        let mut changed = true;
        while changed {
            changed = false;
            for p in 0..e1.points() {
                if next[p] == usize::MAX {
                    continue;
                }
                for g in 0..e1.actor().size() {
                    let q = e1.apply(g, p);
                    let forced = e2.apply(g, next[p]);
                    if next[q] == usize::MAX {
                        next[q] = forced;
                        changed = true;
                    } else if next[q] != forced {
                        continue 'cand;
                    }
                }
            }
        }
        if !filter(&next) {
            continue;
        }
        let saved = std::mem::replace(partial, next);
        search_homs(e1, e2, partial, out, filter);
        *partial = saved;
    }
}

/// Quotient of an action by a finite group of equivariant automorphisms,
/// realized as orbit collapse. Returns the quotient action and the
/// projection map.
///
/// The given maps must be equivariant automorphisms of `e`; they are
/// closed under composition internally before collapsing.
pub fn quotient_action(e: &Arc<GAction>, autos: &[EquivariantMap]) -> Result<(Arc<GAction>, EquivariantMap)> {
    let n = e.points();
    for a in autos {
        if a.source.as_ref() != e.as_ref() || a.target.as_ref() != e.as_ref() {
            return Err(Error::NotByAutomorphisms("map not an endomorphism of e".into()));
        }
        if !a.is_bijective() {
            return Err(Error::NotByAutomorphisms("map not bijective".into()));
        }
    }
    // close the permutation set under composition
    let mut perms: BTreeSet<Vec<usize>> = BTreeSet::new();
    perms.insert((0..n).collect());
    let mut frontier: Vec<Vec<usize>> = autos.iter().map(|a| a.map().to_vec()).collect();
    while let Some(p) = frontier.pop() {
        if perms.contains(&p) {
            continue;
        }
        let known: Vec<Vec<usize>> = perms.iter().cloned().collect();
        perms.insert(p.clone());
        for q in known {
            let pq: Vec<usize> = (0..n).map(|x| p[q[x]]).collect();
            let qp: Vec<usize> = (0..n).map(|x| q[p[x]]).collect();
            frontier.push(pq);
            frontier.push(qp);
        }
    }
    // orbit collapse
    let mut class_of = vec![usize::MAX; n];
    let mut classes = 0usize;
    for x in 0..n {
        if class_of[x] != usize::MAX {
            continue;
        }
        let c = classes;
        classes += 1;
        // orbit of x under the closed permutation set
        let mut orbit: BTreeSet<usize> = BTreeSet::new();
        let mut stack = vec![x];
        while let Some(p) = stack.pop() {
            if !orbit.insert(p) {
                continue;
            }
            for perm in &perms {
                stack.push(perm[p]);
            }
        }
        for y in orbit {
            class_of[y] = c;
        }
    }
    let size = e.actor().size();
    let mut act = vec![usize::MAX; size * classes];
    for g in 0..size {
        for x in 0..n {
            let c = class_of[x];
            let target = class_of[e.apply(g, x)];
            if act[g * classes + c] == usize::MAX {
                act[g * classes + c] = target;
            } else if act[g * classes + c] != target {
                return Err(Error::NotByAutomorphisms(
                    "collapse is not well-defined; maps are not equivariant".into(),
                ));
            }
        }
    }
    let quotient = Arc::new(GAction::new(
        format!("{}/auts", e.name),
        e.actor().clone(),
        classes,
        act,
    )?);
    let projection = EquivariantMap::new(e.clone(), quotient.clone(), class_of)?;
    Ok((quotient, projection))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{cyclic, klein_four, quaternion, subgroups, symmetric};

    fn arc_g(g: FiniteGroup) -> Arc<FiniteGroup> {
        Arc::new(g)
    }

    #[test]
    fn trivial_action_has_singleton_orbits() {
        let g = arc_g(symmetric(3));
        let a = GAction::trivial(Actor::Group(g), 3);
        assert_eq!(orbits(&a).unwrap().len(), 3);
    }

    #[test]
    fn regular_action_is_free_and_transitive() {
        let g = arc_g(symmetric(3));
        let a = GAction::regular(g.clone());
        assert_eq!(orbits(&a).unwrap().len(), 1);
        for x in 0..a.points() {
            assert_eq!(stabilizer(&a, x).unwrap().len(), 1);
        }
    }

    #[test]
    fn coset_action_on_index_three_subgroup() {
        let g = arc_g(symmetric(3));
        let caps = Caps::default();
        let h = subgroups(&g, &caps)
            .unwrap()
            .into_iter()
            .find(|s| s.len() == 2)
            .unwrap();
        let a = coset_action(&g, &h).unwrap();
        assert_eq!(a.points(), 3);
        assert_eq!(orbits(&a).unwrap().len(), 1);
        // stabilizer of the identity coset is h itself
        assert_eq!(stabilizer(&a, 0).unwrap(), h);
    }

    #[test]
    fn coset_action_edge_cases() {
        let g = arc_g(symmetric(3));
        let whole = Subgroup::whole(&g);
        assert_eq!(coset_action(&g, &whole).unwrap().points(), 1);
        let trivial = Subgroup::trivial(&g);
        let reg = coset_action(&g, &trivial).unwrap();
        assert_eq!(reg.points(), 6);
        // regular: kernel of the action is trivial, stabilizers trivial
        assert_eq!(stabilizer(&reg, 0).unwrap().len(), 1);
    }

    #[test]
    fn coset_action_kernel_of_normal_subgroup() {
        let g = arc_g(symmetric(3));
        let caps = Caps::default();
        let a3 = subgroups(&g, &caps)
            .unwrap()
            .into_iter()
            .find(|s| s.len() == 3)
            .unwrap();
        let a = coset_action(&g, &a3).unwrap();
        assert_eq!(a.points(), 2);
        // kernel = elements acting trivially = A3
        let kernel: Vec<usize> = (0..g.size())
            .filter(|&x| (0..a.points()).all(|p| a.apply(x, p) == p))
            .collect();
        assert_eq!(kernel, a3.members());
    }

    #[test]
    fn orbit_stabilizer_for_all_transitive_s3_actions() {
        let g = arc_g(symmetric(3));
        let caps = Caps::default();
        for a in classify_transitive(&g, &caps).unwrap() {
            for x in 0..a.points() {
                let stab = stabilizer(&a, x).unwrap();
                assert_eq!(a.points() * stab.len(), g.size());
            }
        }
    }

    #[test]
    fn classify_transitive_counts_and_sizes() {
        let caps = Caps::default();
        let trivial = arc_g(cyclic(1));
        assert_eq!(classify_transitive(&trivial, &caps).unwrap().len(), 1);

        let s3 = arc_g(symmetric(3));
        let acts = classify_transitive(&s3, &caps).unwrap();
        let sizes: Vec<usize> = acts.iter().map(GAction::points).collect();
        assert_eq!(sizes, vec![1, 2, 3, 6]);

        let q8 = arc_g(quaternion());
        assert_eq!(classify_transitive(&q8, &caps).unwrap().len(), 6);
    }

    #[test]
    fn classify_transitive_members_pairwise_nonisomorphic() {
        let g = arc_g(quaternion());
        let caps = Caps::default();
        let acts: Vec<Arc<GAction>> = classify_transitive(&g, &caps)
            .unwrap()
            .into_iter()
            .map(Arc::new)
            .collect();
        for i in 0..acts.len() {
            for j in (i + 1)..acts.len() {
                assert!(action_isomorphic(&acts[i], &acts[j]).unwrap().is_none());
            }
        }
    }

    /// Oracle: brute force over every map table, for tiny cases.
    fn oracle_homs(e1: &Arc<GAction>, e2: &Arc<GAction>) -> usize {
        let n = e1.points();
        let m = e2.points();
        assert!(m.pow(n as u32) <= 1 << 20);
        let mut count = 0;
        let mut table = vec![0usize; n];
        loop {
            if EquivariantMap::new(e1.clone(), e2.clone(), table.clone()).is_ok() {
                count += 1;
            }
            // odometer
            let mut i = 0;
            loop {
                if i == n {
                    return count;
                }
                table[i] += 1;
                if table[i] < m {
                    break;
                }
                table[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn hom_from_regular_matches_point_count() {
        let g = arc_g(symmetric(3));
        let caps = Caps::default();
        let reg = Arc::new(GAction::regular(g.clone()));
        for a in classify_transitive(&g, &caps).unwrap() {
            let a = Arc::new(a);
            assert_eq!(hom_actions(&reg, &a).unwrap().len(), a.points());
        }
    }

    #[test]
    fn hom_from_one_point_lands_in_fixed_points() {
        let g = arc_g(symmetric(3));
        let one = Arc::new(GAction::trivial(Actor::Group(g.clone()), 1));
        let reg = Arc::new(GAction::regular(g.clone()));
        assert_eq!(hom_actions(&one, &reg).unwrap().len(), 0);
        let triv3 = Arc::new(GAction::trivial(Actor::Group(g.clone()), 3));
        assert_eq!(hom_actions(&one, &triv3).unwrap().len(), 3);
    }

    #[test]
    fn hom_between_incomparable_stabilizers_is_empty() {
        // hom(S3/<(12)>, S3/<(123)>) = 0: the 2-element stabilizer is not
        // subconjugate to the 3-element one
        let g = arc_g(symmetric(3));
        let caps = Caps::default();
        let subs = subgroups(&g, &caps).unwrap();
        let h2 = subs.iter().find(|s| s.len() == 2).unwrap();
        let h3 = subs.iter().find(|s| s.len() == 3).unwrap();
        let a2 = Arc::new(coset_action(&g, h2).unwrap());
        let a3 = Arc::new(coset_action(&g, h3).unwrap());
        assert!(hom_actions(&a2, &a3).unwrap().is_empty());
        assert_eq!(oracle_homs(&a2, &a3), 0);
    }

    #[test]
    fn hom_counts_match_brute_force_oracle() {
        let g = arc_g(symmetric(3));
        let caps = Caps::default();
        let acts: Vec<Arc<GAction>> = classify_transitive(&g, &caps)
            .unwrap()
            .into_iter()
            .filter(|a| a.points() <= 3)
            .map(Arc::new)
            .collect();
        for a in &acts {
            for b in &acts {
                assert_eq!(
                    hom_actions(a, b).unwrap().len(),
                    oracle_homs(a, b),
                    "hom({}, {})",
                    a.name,
                    b.name
                );
            }
        }
    }

    #[test]
    fn action_isomorphism_for_conjugate_subgroups() {
        let g = arc_g(symmetric(3));
        let caps = Caps::default();
        let subs = subgroups(&g, &caps).unwrap();
        let twos: Vec<&Subgroup> = subs.iter().filter(|s| s.len() == 2).collect();
        assert_eq!(twos.len(), 3);
        let a = Arc::new(coset_action(&g, twos[0]).unwrap());
        let b = Arc::new(coset_action(&g, twos[1]).unwrap());
        assert!(action_isomorphic(&a, &b).unwrap().is_some());
    }

    #[test]
    fn action_isomorphism_self_witness_is_identity() {
        let g = arc_g(klein_four());
        let a = Arc::new(GAction::regular(g));
        let w = action_isomorphic(&a, &a).unwrap().unwrap();
        assert_eq!(w.map(), (0..4).collect::<Vec<_>>());
    }

    #[test]
    fn transitive_action_isomorphic_to_coset_action_on_stabilizer() {
        let g = arc_g(quaternion());
        let caps = Caps::default();
        for a in classify_transitive(&g, &caps).unwrap() {
            let a = Arc::new(a);
            let stab = stabilizer(&a, 0).unwrap();
            let b = Arc::new(coset_action(&g, &stab).unwrap());
            assert!(action_isomorphic(&a, &b).unwrap().is_some());
        }
    }

    #[test]
    fn quotient_by_trivial_group_is_identity() {
        let g = arc_g(symmetric(3));
        let a = Arc::new(GAction::regular(g));
        let (q, proj) = quotient_action(&a, &[]).unwrap();
        assert_eq!(q.points(), a.points());
        assert!(proj.is_bijective());
    }

    #[test]
    fn quotient_of_regular_by_right_translations_is_coset_action() {
        let g = arc_g(symmetric(3));
        let caps = Caps::default();
        let reg = Arc::new(GAction::regular(g.clone()));
        for h in subgroups(&g, &caps).unwrap() {
            // right translation by h is an automorphism of the left-regular action
            let autos: Vec<EquivariantMap> = h
                .members()
                .iter()
                .map(|&m| {
                    let table: Vec<usize> = (0..g.size()).map(|x| g.mul(x, m)).collect();
                    EquivariantMap::new(reg.clone(), reg.clone(), table).unwrap()
                })
                .collect();
            let (q, proj) = quotient_action(&reg, &autos).unwrap();
            assert!(proj.is_surjective());
            let coset = Arc::new(coset_action(&g, &h).unwrap());
            assert!(action_isomorphic(&q, &coset).unwrap().is_some());
        }
    }

    #[test]
    fn quotient_v4_regular_by_order_two_factor() {
        let g = arc_g(klein_four());
        let reg = Arc::new(GAction::regular(g.clone()));
        // right translation by element 1
        let table: Vec<usize> = (0..4).map(|x| g.mul(x, 1)).collect();
        let auto = EquivariantMap::new(reg.clone(), reg.clone(), table).unwrap();
        let (q, _) = quotient_action(&reg, &[auto]).unwrap();
        assert_eq!(q.points(), 2);
    }

    #[test]
    fn quotient_universal_property_via_hom_exhaustion() {
        // every equivariant map out of e constant on the collapsed orbits
        // factors uniquely through the projection
        let g = arc_g(klein_four());
        let reg = Arc::new(GAction::regular(g.clone()));
        let table: Vec<usize> = (0..4).map(|x| g.mul(x, 1)).collect();
        let auto = EquivariantMap::new(reg.clone(), reg.clone(), table).unwrap();
        let (q, proj) = quotient_action(&reg, std::slice::from_ref(&auto)).unwrap();
        let caps = Caps::default();
        for target in classify_transitive(&g, &caps).unwrap() {
            let target = Arc::new(target);
            for f in hom_actions(&reg, &target).unwrap() {
                let constant = (0..reg.points()).all(|x| f.apply(x) == f.apply(auto.apply(x)));
                let factorizations: Vec<EquivariantMap> = hom_actions(&q, &target)
                    .unwrap()
                    .into_iter()
                    .filter(|phi| (0..reg.points()).all(|x| phi.apply(proj.apply(x)) == f.apply(x)))
                    .collect();
                if constant {
                    assert_eq!(factorizations.len(), 1);
                } else {
                    assert!(factorizations.is_empty());
                }
            }
        }
    }

    #[test]
    fn monoid_orbit_request_is_rejected() {
        let m = Arc::new(crate::algebra::idempotent_monoid());
        let a = GAction::regular_monoid(m);
        assert_eq!(orbits(&a).unwrap_err(), Error::MonoidActorUnsupported);
    }

    #[test]
    fn monoid_hom_enumeration_works() {
        let m = Arc::new(crate::algebra::idempotent_monoid());
        let a = Arc::new(GAction::regular_monoid(m.clone()));
        // endomorphisms of the free M-set M are right multiplications: |M| of them
        assert_eq!(hom_actions(&a, &a).unwrap().len(), 2);
    }
}
