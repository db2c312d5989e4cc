//! Explicit finite groups and monoids.
//!
//! Elements are dense indices `0..size`, composition is a full table, and
//! every law is checked by exhaustion at construction time. Generator-based
//! representations are deliberately avoided: at the sizes this engine
//! targets (default cap 64), storing the whole table makes every question
//! decidable by a direct scan.
//!
//! Convention: `mul(a, b)` is "apply `b`, then `a`" whenever elements are
//! thought of as functions, so that left actions satisfy
//! `act(mul(a, b), x) == act(a, act(b, x))`.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::caps::Caps;
use crate::error::{Error, Result};

/// A finite monoid: a total composition table over `0..size` with a
/// two-sided identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteMonoid {
    pub name: String,
    size: usize,
    /// Row-major: `table[a * size + b] = mul(a, b)`.
    table: Vec<usize>,
    identity: usize,
}

impl FiniteMonoid {
    /// Validates the tables and returns the monoid, or the first violated
    /// law with a witnessing triple.
    pub fn new(name: impl Into<String>, size: usize, table: Vec<usize>, identity: usize) -> Result<Self> {
        if table.len() != size * size {
            return Err(Error::BadTableShape {
                expected: size * size,
                got: table.len(),
            });
        }
        for &v in &table {
            if v >= size {
                return Err(Error::EntryOutOfRange(v));
            }
        }
        if identity >= size {
            return Err(Error::EntryOutOfRange(identity));
        }
        let m = FiniteMonoid {
            name: name.into(),
            size,
            table,
            identity,
        };
        for a in 0..size {
            if m.mul(m.identity, a) != a || m.mul(a, m.identity) != a {
                return Err(Error::BadIdentity(a));
            }
        }
        for a in 0..size {
            for b in 0..size {
                for c in 0..size {
                    if m.mul(m.mul(a, b), c) != m.mul(a, m.mul(b, c)) {
                        return Err(Error::NonAssociative(a, b, c));
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size + b]
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    /// The opposite monoid: same elements, reversed composition.
    pub fn opposite(&self) -> FiniteMonoid {
        let mut table = vec![0; self.size * self.size];
        for a in 0..self.size {
            for b in 0..self.size {
                table[a * self.size + b] = self.mul(b, a);
            }
        }
        FiniteMonoid {
            name: format!("{}^op", self.name),
            size: self.size,
            table,
            identity: self.identity,
        }
    }

    /// True when every element has a two-sided inverse.
    pub fn is_group(&self) -> bool {
        (0..self.size).all(|a| {
            (0..self.size).any(|b| self.mul(a, b) == self.identity && self.mul(b, a) == self.identity)
        })
    }

    /// The invertible elements.
    pub fn units(&self) -> Vec<usize> {
        (0..self.size)
            .filter(|&a| {
                (0..self.size)
                    .any(|b| self.mul(a, b) == self.identity && self.mul(b, a) == self.identity)
            })
            .collect()
    }
}

/// A finite group: a [`FiniteMonoid`] together with its inverse table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    monoid: FiniteMonoid,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Validates group laws on raw tables. The inverse table, when not
    /// supplied, is recovered from the composition table.
    pub fn new(
        name: impl Into<String>,
        size: usize,
        table: Vec<usize>,
        identity: usize,
        inverse: Option<Vec<usize>>,
    ) -> Result<Self> {
        let monoid = FiniteMonoid::new(name, size, table, identity)?;
        let inverse = match inverse {
            Some(inv) => {
                if inv.len() != size {
                    return Err(Error::BadTableShape {
                        expected: size,
                        got: inv.len(),
                    });
                }
                inv
            }
            None => {
                let mut inv = vec![usize::MAX; size];
                for a in 0..size {
                    for b in 0..size {
                        if monoid.mul(a, b) == identity && monoid.mul(b, a) == identity {
                            inv[a] = b;
                            break;
                        }
                    }
                    if inv[a] == usize::MAX {
                        return Err(Error::BadInverse(a));
                    }
                }
                inv
            }
        };
        for a in 0..size {
            let b = inverse[a];
            if b >= size {
                return Err(Error::EntryOutOfRange(b));
            }
            if monoid.mul(a, b) != identity || monoid.mul(b, a) != identity {
                return Err(Error::BadInverse(a));
            }
        }
        Ok(FiniteGroup { monoid, inverse })
    }

    pub fn name(&self) -> &str {
        &self.monoid.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.monoid.name = name.into();
    }

    pub fn size(&self) -> usize {
        self.monoid.size
    }

    pub fn identity(&self) -> usize {
        self.monoid.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.monoid.mul(a, b)
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn monoid(&self) -> &FiniteMonoid {
        &self.monoid
    }

    pub fn inverse_table(&self) -> &[usize] {
        &self.inverse
    }

    /// Conjugate `g h g^-1`.
    #[inline]
    pub fn conj(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.inv(g))
    }

    /// Order of a single element.
    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut n = 1;
        while x != self.identity() {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    /// The opposite group (reversed composition table).
    pub fn opposite(&self) -> FiniteGroup {
        FiniteGroup {
            monoid: self.monoid.opposite(),
            inverse: self.inverse.clone(),
        }
    }

    /// Relabels elements by `perm` (index `i` becomes `perm[i]`).
    /// Useful for producing isomorphic copies in tests.
    pub fn relabel(&self, perm: &[usize]) -> Result<FiniteGroup> {
        let n = self.size();
        if perm.len() != n {
            return Err(Error::BadTableShape {
                expected: n,
                got: perm.len(),
            });
        }
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[perm[a] * n + perm[b]] = perm[self.mul(a, b)];
            }
        }
        FiniteGroup::new(
            format!("{}~", self.name()),
            n,
            table,
            perm[self.identity()],
            None,
        )
    }

    /// sorted multiset of element orders; an isomorphism invariant.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.size()).map(|a| self.element_order(a)).collect();
        v.sort_unstable();
        v
    }

    /// A small generating sequence, grown greedily by lowest index.
    pub fn greedy_generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut have = closure_of(self, &[]);
        while have.len() < self.size() {
            let next = (0..self.size()).find(|a| !have.contains(a)).unwrap();
            gens.push(next);
            have = closure_of(self, &gens);
        }
        gens
    }
}

/// Validates raw tables as a group. This is the `validate` entry point:
/// it reports the first violated law with a witness.
pub fn validate_group(
    name: &str,
    size: usize,
    table: Vec<usize>,
    identity: usize,
    inverse: Option<Vec<usize>>,
) -> Result<FiniteGroup> {
    FiniteGroup::new(name, size, table, identity, inverse)
}

/// Closure of a set of elements under composition and inverses.
/// Always contains the identity.
pub fn closure_of(g: &FiniteGroup, gens: &[usize]) -> BTreeSet<usize> {
    let mut set: BTreeSet<usize> = BTreeSet::new();
    set.insert(g.identity());
    set.extend(gens.iter().copied());
    loop {
        let members: Vec<usize> = set.iter().copied().collect();
        let mut grew = false;
        for &a in &members {
            grew |= set.insert(g.inv(a));
            for &b in &members {
                grew |= set.insert(g.mul(a, b));
            }
        }
        if !grew {
            break;
        }
    }
    set
}

/// A subgroup of a shared parent group, stored as a sorted member list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subgroup {
    members: Vec<usize>,
}

impl Subgroup {
    /// Checks the member set is closed under composition and inverse and
    /// contains the identity.
    pub fn new(parent: &FiniteGroup, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let set: BTreeSet<usize> = members.into_iter().collect();
        if !set.contains(&parent.identity()) {
            return Err(Error::NotASubgroup("missing identity".into()));
        }
        for &a in &set {
            if a >= parent.size() {
                return Err(Error::EntryOutOfRange(a));
            }
            if !set.contains(&parent.inv(a)) {
                return Err(Error::NotASubgroup(format!("not closed under inverse at {a}")));
            }
            for &b in &set {
                if !set.contains(&parent.mul(a, b)) {
                    return Err(Error::NotASubgroup(format!(
                        "not closed under composition at ({a}, {b})"
                    )));
                }
            }
        }
        Ok(Subgroup {
            members: set.into_iter().collect(),
        })
    }

    pub fn trivial(parent: &FiniteGroup) -> Self {
        Subgroup {
            members: vec![parent.identity()],
        }
    }

    pub fn whole(parent: &FiniteGroup) -> Self {
        Subgroup {
            members: (0..parent.size()).collect(),
        }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.binary_search(&a).is_ok()
    }

    /// The conjugate subgroup `g H g^-1`.
    pub fn conjugate(&self, parent: &FiniteGroup, g: usize) -> Subgroup {
        let mut members: Vec<usize> = self.members.iter().map(|&h| parent.conj(g, h)).collect();
        members.sort_unstable();
        Subgroup { members }
    }

    pub fn is_normal(&self, parent: &FiniteGroup) -> bool {
        (0..parent.size()).all(|g| self.conjugate(parent, g) == *self)
    }

    /// Intersection with another subgroup of the same parent.
    pub fn intersect(&self, other: &Subgroup) -> Subgroup {
        let members: Vec<usize> = self
            .members
            .iter()
            .copied()
            .filter(|&a| other.contains(a))
            .collect();
        Subgroup { members }
    }

    /// Realizes the subgroup as a standalone [`FiniteGroup`] whose element
    /// `i` is `members[i]`.
    pub fn as_group(&self, parent: &FiniteGroup, name: impl Into<String>) -> FiniteGroup {
        let n = self.members.len();
        let index_of = |v: usize| self.members.binary_search(&v).unwrap();
        let mut table = vec![0; n * n];
        for (i, &a) in self.members.iter().enumerate() {
            for (j, &b) in self.members.iter().enumerate() {
                table[i * n + j] = index_of(parent.mul(a, b));
            }
        }
        FiniteGroup::new(name, n, table, index_of(parent.identity()), None)
            .expect("subgroup table is a group by construction")
    }
}

/// All subgroups of `g`, in deterministic order (by size, then
/// lexicographic member list).
///
/// Enumeration grows subgroups one generator at a time and closes; every
/// subgroup is reachable this way from the trivial one.
pub fn subgroups(g: &FiniteGroup, caps: &Caps) -> Result<Vec<Subgroup>> {
    caps.check_group_size(g.size())?;
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let trivial: Vec<usize> = vec![g.identity()];
    let mut queue: Vec<Vec<usize>> = vec![trivial.clone()];
    found.insert(trivial);
    while let Some(current) = queue.pop() {
        for a in 0..g.size() {
            if current.binary_search(&a).is_ok() {
                continue;
            }
            let mut gens: Vec<usize> = current.clone();
            gens.push(a);
            let closed: Vec<usize> = closure_of(g, &gens).into_iter().collect();
            if found.insert(closed.clone()) {
                queue.push(closed);
            }
        }
    }
    let mut out: Vec<Subgroup> = found.into_iter().map(|members| Subgroup { members }).collect();
    out.sort_by(|a, b| (a.len(), &a.members).cmp(&(b.len(), &b.members)));
    Ok(out)
}

/// Partition of `subgroups(g)` under conjugation. Class members stay in
/// the deterministic subgroup order; the first member is the
/// representative.
pub fn conjugacy_classes_of_subgroups(g: &FiniteGroup, caps: &Caps) -> Result<Vec<Vec<Subgroup>>> {
    let subs = subgroups(g, caps)?;
    let mut classes: Vec<Vec<Subgroup>> = Vec::new();
    let mut assigned = vec![false; subs.len()];
    for i in 0..subs.len() {
        if assigned[i] {
            continue;
        }
        let mut class = vec![subs[i].clone()];
        assigned[i] = true;
        for j in (i + 1)..subs.len() {
            if assigned[j] || subs[j].len() != subs[i].len() {
                continue;
            }
            if (0..g.size()).any(|x| subs[i].conjugate(g, x) == subs[j]) {
                class.push(subs[j].clone());
                assigned[j] = true;
            }
        }
        classes.push(class);
    }
    Ok(classes)
}

/// The largest normal subgroup of `g` contained in `h`: the intersection
/// of all conjugates of `h`.
pub fn normal_core(g: &FiniteGroup, h: &Subgroup) -> Result<Subgroup> {
    Subgroup::new(g, h.members().iter().copied())
        .map_err(|_| Error::NotASubgroup("normal_core argument".into()))?;
    let mut core = h.clone();
    for x in 0..g.size() {
        core = core.intersect(&h.conjugate(g, x));
    }
    Ok(core)
}

/// A homomorphism between two explicit groups, as a total element map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupHom {
    pub source: Arc<FiniteGroup>,
    pub target: Arc<FiniteGroup>,
    map: Vec<usize>,
}

impl GroupHom {
    pub fn new(source: Arc<FiniteGroup>, target: Arc<FiniteGroup>, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.size() {
            return Err(Error::BadTableShape {
                expected: source.size(),
                got: map.len(),
            });
        }
        for &v in &map {
            if v >= target.size() {
                return Err(Error::EntryOutOfRange(v));
            }
        }
        if map[source.identity()] != target.identity() {
            return Err(Error::NotAHomomorphism("identity not preserved".into()));
        }
        for a in 0..source.size() {
            for b in 0..source.size() {
                if map[source.mul(a, b)] != target.mul(map[a], map[b]) {
                    return Err(Error::NotAHomomorphism(format!(
                        "multiplicativity fails at ({a}, {b})"
                    )));
                }
            }
        }
        Ok(GroupHom { source, target, map })
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    /// Sorted image of the map.
    pub fn image(&self) -> Vec<usize> {
        let set: BTreeSet<usize> = self.map.iter().copied().collect();
        set.into_iter().collect()
    }

    pub fn is_surjective(&self) -> bool {
        self.image().len() == self.target.size()
    }

    pub fn is_injective(&self) -> bool {
        self.image().len() == self.source.size()
    }

    pub fn kernel(&self) -> Subgroup {
        let members: Vec<usize> = (0..self.source.size())
            .filter(|&a| self.map[a] == self.target.identity())
            .collect();
        Subgroup { members }
    }

    pub fn compose(&self, earlier: &GroupHom) -> Result<GroupHom> {
        if earlier.target.as_ref() != self.source.as_ref() {
            return Err(Error::NotAHomomorphism("composition sources mismatch".into()));
        }
        let map: Vec<usize> = (0..earlier.source.size())
            .map(|a| self.map[earlier.map[a]])
            .collect();
        GroupHom::new(earlier.source.clone(), self.target.clone(), map)
    }
}

/// Searches for an isomorphism `g1 -> g2` by backtracking over images of
/// a greedy generating set. Returns a witness or a definitive `None`.
pub fn group_isomorphic(g1: &Arc<FiniteGroup>, g2: &Arc<FiniteGroup>) -> Option<GroupHom> {
    if g1.size() != g2.size() {
        return None;
    }
    if g1.order_profile() != g2.order_profile() {
        return None;
    }
    let gens = g1.greedy_generators();
    if gens.is_empty() {
        // trivial group
        return GroupHom::new(g1.clone(), g2.clone(), vec![g2.identity()]).ok();
    }
    // express every element of g1 as a word in the generators by BFS
    let words = words_in_generators(g1, &gens);
    let mut images = Vec::with_capacity(gens.len());
    backtrack_iso(g1, g2, &gens, &words, &mut images)
}

/// For each element, a word (sequence of generator indices) evaluating to
/// it. Built by BFS so words are shortest-first and deterministic.
fn words_in_generators(g: &FiniteGroup, gens: &[usize]) -> Vec<Vec<usize>> {
    let n = g.size();
    let mut words: Vec<Option<Vec<usize>>> = vec![None; n];
    words[g.identity()] = Some(vec![]);
    let mut frontier = vec![g.identity()];
    while let Some(a) = frontier.pop() {
        let base = words[a].clone().unwrap();
        for (gi, &gen) in gens.iter().enumerate() {
            let b = g.mul(gen, a);
            if words[b].is_none() {
                let mut w = base.clone();
                w.push(gi);
                words[b] = Some(w);
                frontier.push(b);
            }
        }
    }
    words
        .into_iter()
        .map(|w| w.expect("generators generate the group"))
        .collect()
}

fn backtrack_iso(
    g1: &Arc<FiniteGroup>,
    g2: &Arc<FiniteGroup>,
    gens: &[usize],
    words: &[Vec<usize>],
    images: &mut Vec<usize>,
) -> Option<GroupHom> {
    if images.len() == gens.len() {
        let map = map_from_generator_images(g1, g2, words, images);
        return GroupHom::new(g1.clone(), g2.clone(), map)
            .ok()
            .filter(GroupHom::is_injective);
    }
    let next = gens[images.len()];
    let target_order = g1.element_order(next);
    for cand in 0..g2.size() {
        if g2.element_order(cand) != target_order {
            continue;
        }
        images.push(cand);
        if let Some(hom) = backtrack_iso(g1, g2, gens, words, images) {
            return Some(hom);
        }
        images.pop();
    }
    None
}

fn map_from_generator_images(
    g1: &FiniteGroup,
    g2: &FiniteGroup,
    words: &[Vec<usize>],
    images: &[usize],
) -> Vec<usize> {
    (0..g1.size())
        .map(|a| {
            // words store generator applications left-to-right as
            // b -> mul(gen, b), so evaluate in the same order
            words[a]
                .iter()
                .fold(g2.identity(), |acc, &gi| g2.mul(images[gi], acc))
        })
        .collect()
}

/// Monoid isomorphism by exhaustive backtracking on the full element map.
/// Only intended for very small monoids.
pub fn monoid_isomorphic(m1: &FiniteMonoid, m2: &FiniteMonoid) -> Option<Vec<usize>> {
    if m1.size() != m2.size() {
        return None;
    }
    let n = m1.size();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    map[m1.identity()] = m2.identity();
    used[m2.identity()] = true;
    fn rec(
        m1: &FiniteMonoid,
        m2: &FiniteMonoid,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        next: usize,
    ) -> bool {
        let n = m1.size();
        if next == n {
            for a in 0..n {
                for b in 0..n {
                    if map[m1.mul(a, b)] != m2.mul(map[a], map[b]) {
                        return false;
                    }
                }
            }
            return true;
        }
        if map[next] != usize::MAX {
            return rec(m1, m2, map, used, next + 1);
        }
        for cand in 0..n {
            if used[cand] {
                continue;
            }
            map[next] = cand;
            used[cand] = true;
            // partial consistency: products of already-mapped elements
            let consistent = (0..n).all(|a| {
                (0..n).all(|b| {
                    if map[a] == usize::MAX || map[b] == usize::MAX {
                        return true;
                    }
                    let p = m1.mul(a, b);
                    map[p] == usize::MAX || map[p] == m2.mul(map[a], map[b])
                })
            });
            if consistent && rec(m1, m2, map, used, next + 1) {
                return true;
            }
            map[next] = usize::MAX;
            used[cand] = false;
        }
        false
    }
    if rec(m1, m2, &mut map, &mut used, 0) {
        Some(map)
    } else {
        None
    }
}

// ---------------------------------------------------------------------------
// stock groups and monoids
// ---------------------------------------------------------------------------

/// Builds a group from permutation generators acting on `0..degree`.
/// Element 0 is the identity; the element list is the sorted closure.
pub fn group_from_permutations(
    name: &str,
    degree: usize,
    gens: &[Vec<usize>],
) -> Result<FiniteGroup> {
    let id: Vec<usize> = (0..degree).collect();
    let mut elems: BTreeSet<Vec<usize>> = BTreeSet::new();
    elems.insert(id.clone());
    let mut frontier: Vec<Vec<usize>> = vec![id];
    while let Some(p) = frontier.pop() {
        for g in gens {
            // compose: apply p, then g
            let q: Vec<usize> = (0..degree).map(|i| g[p[i]]).collect();
            if elems.insert(q.clone()) {
                frontier.push(q);
            }
        }
    }
    let perms: Vec<Vec<usize>> = elems.into_iter().collect();
    let n = perms.len();
    let index_of = |p: &Vec<usize>| perms.binary_search(p).unwrap();
    let mut table = vec![0; n * n];
    for (i, a) in perms.iter().enumerate() {
        for (j, b) in perms.iter().enumerate() {
            // mul(a, b) applies b first
            let c: Vec<usize> = (0..degree).map(|x| a[b[x]]).collect();
            table[i * n + j] = index_of(&c);
        }
    }
    let identity = index_of(&(0..degree).collect());
    FiniteGroup::new(name, n, table, identity, None)
}

/// Cyclic group of order `n`, elements as residues.
pub fn cyclic(n: usize) -> FiniteGroup {
    let mut table = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            table[a * n + b] = (a + b) % n;
        }
    }
    FiniteGroup::new(format!("C{n}"), n, table, 0, None).expect("cyclic table is a group")
}

/// Klein four-group as C2 x C2.
pub fn klein_four() -> FiniteGroup {
    let mut g = direct_product(&cyclic(2), &cyclic(2));
    g.set_name("V4");
    g
}

pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
    let n = a.size() * b.size();
    let idx = |x: usize, y: usize| x * b.size() + y;
    let mut table = vec![0; n * n];
    for x1 in 0..a.size() {
        for y1 in 0..b.size() {
            for x2 in 0..a.size() {
                for y2 in 0..b.size() {
                    table[idx(x1, y1) * n + idx(x2, y2)] = idx(a.mul(x1, x2), b.mul(y1, y2));
                }
            }
        }
    }
    FiniteGroup::new(
        format!("{}x{}", a.name(), b.name()),
        n,
        table,
        idx(a.identity(), b.identity()),
        None,
    )
    .expect("product table is a group")
}

/// Symmetric group on `n` letters via permutation closure.
pub fn symmetric(n: usize) -> FiniteGroup {
    assert!(n >= 1 && n <= 5, "symmetric(n) supported for 1 <= n <= 5");
    if n == 1 {
        return FiniteGroup::new("S1", 1, vec![0], 0, None).unwrap();
    }
    let mut transposition: Vec<usize> = (0..n).collect();
    transposition.swap(0, 1);
    let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    group_from_permutations(&format!("S{n}"), n, &[transposition, cycle]).unwrap()
}

/// Alternating group on `n` letters.
pub fn alternating(n: usize) -> FiniteGroup {
    assert!(n >= 3 && n <= 5, "alternating(n) supported for 3 <= n <= 5");
    let mut gens = Vec::new();
    // 3-cycles (0 1 2), (0 1 3), ..., (0 1 n-1) generate A_n
    for k in 2..n {
        let mut p: Vec<usize> = (0..n).collect();
        p[0] = 1;
        p[1] = k;
        p[k] = 0;
        gens.push(p);
    }
    group_from_permutations(&format!("A{n}"), n, &gens).unwrap()
}

/// Dihedral group of order `2n` (symmetries of the n-gon).
pub fn dihedral(n: usize) -> FiniteGroup {
    assert!(n >= 2);
    let rotation: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let reflection: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
    group_from_permutations(&format!("D{n}"), n, &[rotation, reflection]).unwrap()
}

/// Quaternion group of order 8, via its regular representation on
/// {1, i, j, k, -1, -i, -j, -k}.
pub fn quaternion() -> FiniteGroup {
    // encode q = (sign, axis): index = sign * 4 + axis, axis in {1,i,j,k}
    let mul = |a: usize, b: usize| -> usize {
        let (sa, xa) = (a / 4, a % 4);
        let (sb, xb) = (b / 4, b % 4);
        // axis multiplication table for {1,i,j,k}: result (sign, axis)
        const AXIS: [[(usize, usize); 4]; 4] = [
            [(0, 0), (0, 1), (0, 2), (0, 3)],
            [(0, 1), (1, 0), (0, 3), (1, 2)],
            [(0, 2), (1, 3), (1, 0), (0, 1)],
            [(0, 3), (0, 2), (1, 1), (1, 0)],
        ];
        let (s, x) = AXIS[xa][xb];
        (((sa + sb + s) % 2) * 4) + x
    };
    let mut table = vec![0; 64];
    for a in 0..8 {
        for b in 0..8 {
            table[a * 8 + b] = mul(a, b);
        }
    }
    FiniteGroup::new("Q8", 8, table, 0, None).expect("quaternion table is a group")
}

/// The two-element monoid {e, a} with a*a = a. Not a group.
pub fn idempotent_monoid() -> FiniteMonoid {
    FiniteMonoid::new("M2", 2, vec![0, 1, 1, 1], 0).unwrap()
}

/// Three-element monoid {e, a, b} where x*y = x for x, y != e
/// (left-zero semigroup with identity adjoined). Not a group.
pub fn left_zero_monoid3() -> FiniteMonoid {
    // order: e=0, a=1, b=2
    FiniteMonoid::new("LZ3", 3, vec![0, 1, 2, 1, 1, 1, 2, 2, 2], 0).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arc(g: FiniteGroup) -> Arc<FiniteGroup> {
        Arc::new(g)
    }

    /// Independent oracle: every subset containing the identity, checked
    /// directly for closure. Exponential, so only for small groups.
    fn oracle_subgroups(g: &FiniteGroup) -> Vec<Vec<usize>> {
        let n = g.size();
        assert!(n <= 12);
        let mut out = Vec::new();
        for mask in 0u32..(1 << n) {
            if mask & (1 << g.identity()) == 0 {
                continue;
            }
            let members: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
            let closed = members.iter().all(|&a| {
                members.binary_search(&g.inv(a)).is_ok()
                    && members
                        .iter()
                        .all(|&b| members.binary_search(&g.mul(a, b)).is_ok())
            });
            if closed {
                out.push(members);
            }
        }
        out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        out
    }

    #[test]
    fn validate_trivial_group() {
        let g = validate_group("1", 1, vec![0], 0, None).unwrap();
        assert_eq!(g.size(), 1);
    }

    #[test]
    fn validate_c3_inverse() {
        let g = cyclic(3);
        assert_eq!(g.inv(1), 2);
    }

    #[test]
    fn validate_rejects_noninvertible_row() {
        // compose(1,1)=1 and compose(1,2)=1: element 1 has no inverse
        let r = validate_group("bad", 3, vec![0, 1, 2, 1, 1, 1, 2, 1, 0], 0, None);
        assert_eq!(r.unwrap_err(), Error::BadInverse(1));
    }

    #[test]
    fn validate_rejects_bad_identity() {
        let r = FiniteMonoid::new("bad", 2, vec![1, 1, 1, 1], 0);
        assert_eq!(r.unwrap_err(), Error::BadIdentity(0));
    }

    #[test]
    fn subgroup_counts_match_subset_oracle() {
        let caps = Caps::default();
        for g in [cyclic(6), klein_four(), symmetric(3), dihedral(4), quaternion()] {
            let fast: Vec<Vec<usize>> = subgroups(&g, &caps)
                .unwrap()
                .iter()
                .map(|s| s.members().to_vec())
                .collect();
            let slow = oracle_subgroups(&g);
            assert_eq!(fast, slow, "subgroup enumeration differs for {}", g.name());
        }
    }

    #[test]
    fn s3_has_six_subgroups() {
        assert_eq!(subgroups(&symmetric(3), &Caps::default()).unwrap().len(), 6);
    }

    #[test]
    fn v4_subgroups_all_normal() {
        let g = klein_four();
        let subs = subgroups(&g, &Caps::default()).unwrap();
        assert_eq!(subs.len(), 5);
        assert!(subs.iter().all(|h| h.is_normal(&g)));
    }

    #[test]
    fn conjugacy_classes_counts() {
        let caps = Caps::default();
        assert_eq!(conjugacy_classes_of_subgroups(&symmetric(3), &caps).unwrap().len(), 4);
        assert_eq!(conjugacy_classes_of_subgroups(&dihedral(4), &caps).unwrap().len(), 8);
        assert_eq!(conjugacy_classes_of_subgroups(&quaternion(), &caps).unwrap().len(), 6);
        assert_eq!(conjugacy_classes_of_subgroups(&alternating(4), &caps).unwrap().len(), 5);
        // abelian: classes are singletons
        let v4 = klein_four();
        for class in conjugacy_classes_of_subgroups(&v4, &caps).unwrap() {
            assert_eq!(class.len(), 1);
        }
    }

    #[test]
    fn d4_has_ten_subgroups_eight_classes() {
        let g = dihedral(4);
        let caps = Caps::default();
        assert_eq!(subgroups(&g, &caps).unwrap().len(), 10);
        assert_eq!(conjugacy_classes_of_subgroups(&g, &caps).unwrap().len(), 8);
    }

    #[test]
    fn normal_core_properties() {
        let caps = Caps::default();
        for g in [symmetric(3), dihedral(4), quaternion(), alternating(4)] {
            for h in subgroups(&g, &caps).unwrap() {
                let core = normal_core(&g, &h).unwrap();
                assert!(core.is_normal(&g));
                assert!(core.members().iter().all(|&a| h.contains(a)));
                // every normal subgroup of g inside h sits inside the core
                for k in subgroups(&g, &caps).unwrap() {
                    if k.is_normal(&g) && k.members().iter().all(|&a| h.contains(a)) {
                        assert!(k.members().iter().all(|&a| core.contains(a)));
                    }
                }
                if h.is_normal(&g) {
                    assert_eq!(core, h);
                }
            }
        }
    }

    #[test]
    fn s3_core_of_order_two_subgroup_is_trivial() {
        let g = symmetric(3);
        let caps = Caps::default();
        let h = subgroups(&g, &caps)
            .unwrap()
            .into_iter()
            .find(|s| s.len() == 2)
            .unwrap();
        assert_eq!(normal_core(&g, &h).unwrap().len(), 1);
    }

    #[test]
    fn opposite_is_involutive_and_abelian_fixed() {
        let g = symmetric(3);
        assert_eq!(g.opposite().opposite().monoid().table(), g.monoid().table());
        let c6 = cyclic(6);
        assert_eq!(c6.opposite().monoid().table(), c6.monoid().table());
    }

    #[test]
    fn c4_not_isomorphic_to_v4() {
        assert!(group_isomorphic(&arc(cyclic(4)), &arc(klein_four())).is_none());
        // element-order profiles already separate them
        assert_ne!(cyclic(4).order_profile(), klein_four().order_profile());
    }

    #[test]
    fn s3_isomorphic_to_its_opposite() {
        let s3 = arc(symmetric(3));
        let op = arc(s3.opposite());
        let hom = group_isomorphic(&s3, &op).expect("S3 ~ S3^op");
        assert!(hom.is_surjective() && hom.is_injective());
    }

    #[test]
    fn isomorphism_found_under_relabeling() {
        for g in [symmetric(3), dihedral(4), quaternion(), alternating(4)] {
            let n = g.size();
            // a fixed, boring permutation: rotate non-identity elements
            let mut perm: Vec<usize> = (0..n).collect();
            perm.rotate_left(1);
            let h = g.relabel(&perm).unwrap();
            let iso = group_isomorphic(&arc(g.clone()), &arc(h)).expect("relabeled copy is isomorphic");
            assert!(iso.is_injective());
            // subgroup count is invariant
            let caps = Caps::default();
            let perm2: Vec<usize> = {
                let mut p: Vec<usize> = (0..n).collect();
                p.reverse();
                p
            };
            let h2 = g.relabel(&perm2).unwrap();
            assert_eq!(
                subgroups(&g, &caps).unwrap().len(),
                subgroups(&h2, &caps).unwrap().len()
            );
        }
    }

    #[test]
    fn every_stock_group_revalidates() {
        for g in [
            cyclic(2),
            cyclic(3),
            cyclic(4),
            klein_four(),
            symmetric(3),
            dihedral(4),
            quaternion(),
            alternating(4),
        ] {
            let again = validate_group(
                g.name(),
                g.size(),
                g.monoid().table().to_vec(),
                g.identity(),
                Some(g.inverse_table().to_vec()),
            );
            assert!(again.is_ok(), "{} failed revalidation", g.name());
        }
    }

    #[test]
    fn stock_monoids_are_not_groups() {
        assert!(!idempotent_monoid().is_group());
        assert!(!left_zero_monoid3().is_group());
        assert!(cyclic(4).monoid().is_group());
    }

    #[test]
    fn hom_image_and_kernel() {
        let c4 = arc(cyclic(4));
        let c2 = arc(cyclic(2));
        let hom = GroupHom::new(c4.clone(), c2.clone(), vec![0, 1, 0, 1]).unwrap();
        assert!(hom.is_surjective());
        assert_eq!(hom.kernel().members(), &[0, 2]);
    }
}
