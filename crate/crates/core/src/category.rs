//! Finite concrete categories with a fiber functor into finite sets.
//!
//! A category here is fully materialized: a finite object list, every
//! arrow of every hom-set, and a composition rule. Each object carries a
//! finite fiber and each arrow a function between fibers; identity and
//! composition must be functorial over the fibers.
//!
//! Composition comes in two flavors. Categories assembled by the builders
//! in this crate are *concrete*: arrows are identified by their fiber
//! function, so composition is function composition plus a lookup.
//! Categories loaded from files may instead carry an explicit composition
//! table (they can be deliberately non-concrete, e.g. broken fixtures for
//! the axiom checkers).
//!
//! A category also records `complete_upto`: the builder's warrant that
//! every object of the ambient theory with fiber size at most that bound
//! is materialized up to isomorphism. Axiom checks use it to separate
//! "genuinely absent" from "beyond the truncation".

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::action::{self, Actor, GAction};
use crate::algebra::{FiniteGroup, FiniteMonoid};
use crate::caps::Caps;
use crate::error::{Error, Result};

pub type ObjId = usize;
pub type ArrId = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Object {
    pub name: String,
    pub fiber: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub src: ObjId,
    pub dst: ObjId,
    /// Total function from the source fiber to the target fiber.
    pub fiber_map: Vec<usize>,
}

#[derive(Debug, Clone)]
enum Composition {
    /// Arrows are determined by (src, dst, fiber function); composition is
    /// function composition plus binary search in the sorted hom bucket.
    Concrete,
    /// Explicit table on composable pairs: key is (g, f) for g after f.
    Table(HashMap<(ArrId, ArrId), ArrId>),
}

#[derive(Debug, Clone)]
pub struct FiniteConcreteCategory {
    pub name: String,
    objects: Vec<Object>,
    arrows: Vec<Arrow>,
    identities: Vec<ArrId>,
    /// homs[src][dst] = sorted arrow ids
    homs: Vec<Vec<Vec<ArrId>>>,
    composition: Composition,
    /// Every object of the ambient theory with fiber size <= this bound is
    /// materialized. 0 means nothing is warranted.
    pub complete_upto: usize,
}

impl FiniteConcreteCategory {
    /// Builds a concrete category from objects and arrows. Arrows must be
    /// closed under composition (as fiber functions) and include all
    /// identities; this is checked.
    pub fn new_concrete(
        name: impl Into<String>,
        objects: Vec<Object>,
        mut arrows: Vec<Arrow>,
        complete_upto: usize,
    ) -> Result<Self> {
        arrows.sort_by(|a, b| (a.src, a.dst, &a.fiber_map).cmp(&(b.src, b.dst, &b.fiber_map)));
        for (i, a) in arrows.iter().enumerate() {
            if a.src >= objects.len() || a.dst >= objects.len() {
                return Err(Error::MalformedCategory(format!("arrow {i} endpoints out of range")));
            }
            if a.fiber_map.len() != objects[a.src].fiber {
                return Err(Error::MalformedCategory(format!(
                    "arrow {} fiber map has wrong arity",
                    a.name
                )));
            }
            if a.fiber_map.iter().any(|&v| v >= objects[a.dst].fiber) {
                return Err(Error::MalformedCategory(format!(
                    "arrow {} fiber map out of range",
                    a.name
                )));
            }
            if i > 0 {
                let prev = &arrows[i - 1];
                if (prev.src, prev.dst, &prev.fiber_map) == (a.src, a.dst, &a.fiber_map) {
                    return Err(Error::MalformedCategory(format!(
                        "duplicate concrete arrow between {} and {}",
                        objects[a.src].name, objects[a.dst].name
                    )));
                }
            }
        }
        let mut cat = FiniteConcreteCategory {
            name: name.into(),
            identities: Vec::new(),
            homs: Vec::new(),
            composition: Composition::Concrete,
            objects,
            arrows,
            complete_upto,
        };
        cat.rebuild_homs();
        cat.find_identities()?;
        cat.check_concrete_closure()?;
        Ok(cat)
    }

    /// Builds a category with an explicit composition table (used by the
    /// file loader and by hand-built fixtures). Verifies all category laws
    /// and fiber functoriality by exhaustion.
    pub fn new_with_table(
        name: impl Into<String>,
        objects: Vec<Object>,
        arrows: Vec<Arrow>,
        identities: Vec<ArrId>,
        table: HashMap<(ArrId, ArrId), ArrId>,
        complete_upto: usize,
    ) -> Result<Self> {
        let mut cat = FiniteConcreteCategory {
            name: name.into(),
            identities,
            homs: Vec::new(),
            composition: Composition::Table(table),
            objects,
            arrows,
            complete_upto,
        };
        cat.rebuild_homs();
        cat.validate_table_laws()?;
        Ok(cat)
    }

    fn rebuild_homs(&mut self) {
        let n = self.objects.len();
        let mut homs = vec![vec![Vec::new(); n]; n];
        for (i, a) in self.arrows.iter().enumerate() {
            homs[a.src][a.dst].push(i);
        }
        self.homs = homs;
    }

    fn find_identities(&mut self) -> Result<()> {
        let mut ids = Vec::with_capacity(self.objects.len());
        for (x, obj) in self.objects.iter().enumerate() {
            let id_map: Vec<usize> = (0..obj.fiber).collect();
            let found = self.homs[x][x]
                .iter()
                .copied()
                .find(|&a| self.arrows[a].fiber_map == id_map);
            match found {
                Some(a) => ids.push(a),
                None => {
                    return Err(Error::MalformedCategory(format!(
                        "object {} has no identity arrow",
                        obj.name
                    )))
                }
            }
        }
        self.identities = ids;
        Ok(())
    }

    /// Concrete categories must be closed under fiber-map composition.
    fn check_concrete_closure(&self) -> Result<()> {
        let mut scratch = Vec::new();
        for g in 0..self.arrows.len() {
            for f in self.in_arrows(self.arrows[g].src) {
                if self.compose_scratch(g, f, &mut scratch).is_err() {
                    return Err(Error::MalformedCategory(format!(
                        "composite of {} after {} is missing",
                        self.arrows[g].name, self.arrows[f].name
                    )));
                }
            }
        }
        Ok(())
    }

    fn validate_table_laws(&self) -> Result<()> {
        let Composition::Table(table) = &self.composition else {
            return Ok(());
        };
        if self.identities.len() != self.objects.len() {
            return Err(Error::MalformedCategory("missing identities".into()));
        }
        for (x, &i) in self.identities.iter().enumerate() {
            let a = &self.arrows[i];
            if a.src != x || a.dst != x {
                return Err(Error::MalformedCategory(format!(
                    "identity of {} has wrong endpoints",
                    self.objects[x].name
                )));
            }
            let id_map: Vec<usize> = (0..self.objects[x].fiber).collect();
            if a.fiber_map != id_map {
                return Err(Error::MalformedCategory(format!(
                    "identity of {} is not the identity on the fiber",
                    self.objects[x].name
                )));
            }
        }
        // totality, endpoints, functoriality
        for (g, ag) in self.arrows.iter().enumerate() {
            for (f, af) in self.arrows.iter().enumerate() {
                if af.dst != ag.src {
                    if table.contains_key(&(g, f)) {
                        return Err(Error::MalformedCategory(format!(
                            "composite defined for non-composable pair ({}, {})",
                            ag.name, af.name
                        )));
                    }
                    continue;
                }
                let Some(&h) = table.get(&(g, f)) else {
                    return Err(Error::MalformedCategory(format!(
                        "missing composite ({} after {})",
                        ag.name, af.name
                    )));
                };
                let ah = &self.arrows[h];
                if ah.src != af.src || ah.dst != ag.dst {
                    return Err(Error::MalformedCategory(format!(
                        "composite ({} after {}) has wrong endpoints",
                        ag.name, af.name
                    )));
                }
                let composed: Vec<usize> = af.fiber_map.iter().map(|&v| ag.fiber_map[v]).collect();
                if ah.fiber_map != composed {
                    return Err(Error::MalformedCategory(format!(
                        "fiber is not functorial on ({} after {})",
                        ag.name, af.name
                    )));
                }
            }
        }
        // identity laws
        for (f, af) in self.arrows.iter().enumerate() {
            if table.get(&(self.identities[af.dst], f)) != Some(&f)
                || table.get(&(f, self.identities[af.src])) != Some(&f)
            {
                return Err(Error::MalformedCategory(format!(
                    "identity law fails at {}",
                    af.name
                )));
            }
        }
        // associativity
        for (f, af) in self.arrows.iter().enumerate() {
            for &g in self.arrows_from(af.dst) {
                let gf = table[&(g, f)];
                for &h in self.arrows_from(self.arrows[g].dst) {
                    let hg = table[&(h, g)];
                    if table[&(h, gf)] != table[&(hg, f)] {
                        return Err(Error::MalformedCategory(format!(
                            "associativity fails at ({}, {}, {})",
                            self.arrows[h].name, self.arrows[g].name, af.name
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn objects(&self) -> &[Object] {
        &self.objects
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn object(&self, x: ObjId) -> &Object {
        &self.objects[x]
    }

    pub fn arrow(&self, f: ArrId) -> &Arrow {
        &self.arrows[f]
    }

    pub fn fiber(&self, x: ObjId) -> usize {
        self.objects[x].fiber
    }

    pub fn identity(&self, x: ObjId) -> ArrId {
        self.identities[x]
    }

    pub fn hom(&self, x: ObjId, y: ObjId) -> &[ArrId] {
        &self.homs[x][y]
    }

    /// All arrows out of `x`, in id order.
    pub fn arrows_from(&self, x: ObjId) -> impl Iterator<Item = &ArrId> {
        self.homs[x].iter().flatten()
    }

    /// All arrows into `x`, allocated fresh.
    pub fn in_arrows(&self, x: ObjId) -> Vec<ArrId> {
        let mut v = Vec::new();
        for src in 0..self.objects.len() {
            v.extend_from_slice(&self.homs[src][x]);
        }
        v
    }

    pub fn out_arrows(&self, x: ObjId) -> Vec<ArrId> {
        let mut v = Vec::new();
        for dst in 0..self.objects.len() {
            v.extend_from_slice(&self.homs[x][dst]);
        }
        v
    }

    /// Composite `g . f` (apply `f` first). Errors if not composable or
    /// the composite is missing from the category.
    pub fn compose(&self, g: ArrId, f: ArrId) -> Result<ArrId> {
        let mut scratch = Vec::new();
        self.compose_scratch(g, f, &mut scratch)
    }

    /// Allocation-free composition for hot paths: callers supply a scratch
    /// buffer that is reused across calls.
    pub fn compose_scratch(&self, g: ArrId, f: ArrId, scratch: &mut Vec<usize>) -> Result<ArrId> {
        let af = &self.arrows[f];
        let ag = &self.arrows[g];
        if af.dst != ag.src {
            return Err(Error::MalformedCategory(format!(
                "arrows {} and {} are not composable",
                ag.name, af.name
            )));
        }
        match &self.composition {
            Composition::Concrete => {
                scratch.clear();
                scratch.extend(af.fiber_map.iter().map(|&v| ag.fiber_map[v]));
                self.lookup_concrete(af.src, ag.dst, scratch).ok_or_else(|| {
                    Error::MalformedCategory(format!(
                        "category is not closed: composite of {} after {} is absent",
                        ag.name, af.name
                    ))
                })
            }
            Composition::Table(table) => table
                .get(&(g, f))
                .copied()
                .ok_or_else(|| Error::MalformedCategory("composite missing from table".into())),
        }
    }

    /// Binary search in the sorted hom bucket by fiber function.
    fn lookup_concrete(&self, src: ObjId, dst: ObjId, map: &[usize]) -> Option<ArrId> {
        let bucket = &self.homs[src][dst];
        bucket
            .binary_search_by(|&a| self.arrows[a].fiber_map.as_slice().cmp(map))
            .ok()
            .map(|i| bucket[i])
    }

    /// Looks up a concrete arrow by endpoints and fiber function.
    pub fn find_concrete_arrow(&self, src: ObjId, dst: ObjId, map: &[usize]) -> Option<ArrId> {
        match &self.composition {
            Composition::Concrete => self.lookup_concrete(src, dst, map),
            Composition::Table(_) => self.homs[src][dst]
                .iter()
                .copied()
                .find(|&a| self.arrows[a].fiber_map == map),
        }
    }

    pub fn is_concrete(&self) -> bool {
        matches!(self.composition, Composition::Concrete)
    }

    /// Explicit composition table (present for table-mode categories).
    pub fn composition_table(&self) -> Option<&HashMap<(ArrId, ArrId), ArrId>> {
        match &self.composition {
            Composition::Table(t) => Some(t),
            Composition::Concrete => None,
        }
    }

    /// True when `f` is an isomorphism (two-sided inverse exists).
    pub fn is_iso(&self, f: ArrId) -> bool {
        let a = &self.arrows[f];
        self.homs[a.dst][a.src].iter().any(|&g| {
            self.compose(g, f).map(|h| h == self.identities[a.src]).unwrap_or(false)
                && self.compose(f, g).map(|h| h == self.identities[a.dst]).unwrap_or(false)
        })
    }

    /// True when `f` is a monomorphism: checked by exhaustion over all
    /// parallel pairs into its source.
    pub fn is_mono(&self, f: ArrId) -> bool {
        let x = self.arrows[f].src;
        let mut scratch = Vec::new();
        for v in 0..self.objects.len() {
            let mut seen: HashMap<ArrId, ArrId> = HashMap::new();
            for &u in &self.homs[v][x] {
                let fu = self.compose_scratch(f, u, &mut scratch).expect("closed");
                if let Some(&prev) = seen.get(&fu) {
                    if prev != u {
                        return false;
                    }
                } else {
                    seen.insert(fu, u);
                }
            }
        }
        true
    }

    /// The endomorphism monoid of `x`: `mul(a, b)` composes `b` first.
    /// Returns the monoid and the arrow id for each element index.
    pub fn endo_monoid(&self, x: ObjId) -> Result<(FiniteMonoid, Vec<ArrId>)> {
        let endos: Vec<ArrId> = self.homs[x][x].clone();
        let pos: HashMap<ArrId, usize> = endos.iter().enumerate().map(|(i, &a)| (a, i)).collect();
        let n = endos.len();
        let mut table = vec![0usize; n * n];
        for (i, &a) in endos.iter().enumerate() {
            for (j, &b) in endos.iter().enumerate() {
                let c = self.compose(a, b)?;
                table[i * n + j] = *pos.get(&c).ok_or_else(|| {
                    Error::MalformedCategory("endomorphisms are not closed".into())
                })?;
            }
        }
        let identity = pos[&self.identities[x]];
        let m = FiniteMonoid::new(format!("End({})", self.objects[x].name), n, table, identity)?;
        Ok((m, endos))
    }

    /// The automorphism group of `x` (invertible endo-arrows), with the
    /// arrow id for each element index.
    pub fn automorphism_group(&self, x: ObjId) -> Result<(FiniteGroup, Vec<ArrId>)> {
        let autos: Vec<ArrId> = self.homs[x][x]
            .iter()
            .copied()
            .filter(|&a| self.is_iso(a))
            .collect();
        let pos: HashMap<ArrId, usize> = autos.iter().enumerate().map(|(i, &a)| (a, i)).collect();
        let n = autos.len();
        let mut table = vec![0usize; n * n];
        for (i, &a) in autos.iter().enumerate() {
            for (j, &b) in autos.iter().enumerate() {
                let c = self.compose(a, b)?;
                table[i * n + j] = *pos.get(&c).ok_or_else(|| {
                    Error::MalformedCategory("automorphisms are not closed".into())
                })?;
            }
        }
        let identity = pos[&self.identities[x]];
        let g = FiniteGroup::new(format!("Aut({})", self.objects[x].name), n, table, identity, None)?;
        Ok((g, autos))
    }

    /// Re-expresses a concrete category with an explicit composition
    /// table. The result is equal as a category; only the composition
    /// strategy differs. Used to cross-check the two code paths.
    pub fn with_explicit_table(&self) -> Result<FiniteConcreteCategory> {
        let mut table = HashMap::new();
        let mut scratch = Vec::new();
        for g in 0..self.arrows.len() {
            for f in self.in_arrows(self.arrows[g].src) {
                table.insert((g, f), self.compose_scratch(g, f, &mut scratch)?);
            }
        }
        FiniteConcreteCategory::new_with_table(
            self.name.clone(),
            self.objects.clone(),
            self.arrows.clone(),
            self.identities.clone(),
            table,
            self.complete_upto,
        )
    }

    /// The full subcategory on the given objects (shares `complete_upto`
    /// only if the caller says so).
    pub fn full_subcategory(
        &self,
        name: impl Into<String>,
        keep: &[ObjId],
        complete_upto: usize,
    ) -> Result<(FiniteConcreteCategory, Vec<ObjId>)> {
        let mut old_to_new: HashMap<ObjId, ObjId> = HashMap::new();
        let mut objects = Vec::new();
        for &x in keep {
            old_to_new.insert(x, objects.len());
            objects.push(self.objects[x].clone());
        }
        let mut arrows = Vec::new();
        let mut table: HashMap<(ArrId, ArrId), ArrId> = HashMap::new();
        let mut arrow_old_to_new: HashMap<ArrId, ArrId> = HashMap::new();
        for (i, a) in self.arrows.iter().enumerate() {
            if let (Some(&s), Some(&d)) = (old_to_new.get(&a.src), old_to_new.get(&a.dst)) {
                arrow_old_to_new.insert(i, arrows.len());
                arrows.push(Arrow {
                    name: a.name.clone(),
                    src: s,
                    dst: d,
                    fiber_map: a.fiber_map.clone(),
                });
            }
        }
        let cat = if self.is_concrete() {
            FiniteConcreteCategory::new_concrete(name, objects, arrows, complete_upto)?
        } else {
            for (&old_g, &new_g) in &arrow_old_to_new {
                for (&old_f, &new_f) in &arrow_old_to_new {
                    if self.arrows[old_f].dst == self.arrows[old_g].src {
                        let h = self.compose(old_g, old_f)?;
                        let &new_h = arrow_old_to_new.get(&h).ok_or_else(|| {
                            Error::MalformedCategory("subcategory is not closed".into())
                        })?;
                        table.insert((new_g, new_f), new_h);
                    }
                }
            }
            let identities = keep
                .iter()
                .map(|&x| arrow_old_to_new[&self.identities[x]])
                .collect();
            FiniteConcreteCategory::new_with_table(name, objects, arrows, identities, table, complete_upto)?
        };
        Ok((cat, keep.to_vec()))
    }
}

// ---------------------------------------------------------------------------
// strict epimorphisms
// ---------------------------------------------------------------------------

/// Strict-epi and mono status of every arrow, computed once per category.
///
/// `f : X -> Y` is a strict epimorphism when every compatible `g : X -> Z`
/// factors uniquely through it; `g` is compatible when it coequalizes
/// every parallel pair that `f` coequalizes. Both quantifiers run over the
/// whole category.
///
/// Two implementations agree: a generic one that composes arrow pairs
/// directly (used for table-mode categories, which are small), and a
/// concrete one that exploits arrow = fiber function to work pointwise on
/// fibers, grouping arrows by the kernel partition they induce.
#[derive(Debug, Clone)]
pub struct StrictEpiTable {
    strict_epi: Vec<bool>,
    mono: Vec<bool>,
}

impl StrictEpiTable {
    pub fn is_strict_epi(&self, f: ArrId) -> bool {
        self.strict_epi[f]
    }

    pub fn is_mono(&self, f: ArrId) -> bool {
        self.mono[f]
    }
}

pub fn strict_epi_table(c: &FiniteConcreteCategory) -> StrictEpiTable {
    if c.is_concrete() {
        strict_epi_table_concrete(c)
    } else {
        strict_epi_table_generic(c)
    }
}

fn strict_epi_table_generic(c: &FiniteConcreteCategory) -> StrictEpiTable {
    let mut strict_epi = vec![false; c.arrows().len()];
    let mono = (0..c.arrows().len()).map(|f| c.is_mono(f)).collect();
    let mut scratch = Vec::new();
    for x in 0..c.objects().len() {
        let in_arrows = c.in_arrows(x);
        let out_arrows = c.out_arrows(x);
        // composite vector of each out-arrow over the in-arrows
        let composites: HashMap<ArrId, Vec<ArrId>> = out_arrows
            .iter()
            .map(|&f| {
                let v: Vec<ArrId> = in_arrows
                    .iter()
                    .map(|&u| c.compose_scratch(f, u, &mut scratch).expect("closed"))
                    .collect();
                (f, v)
            })
            .collect();
        // kernel partition of an out-arrow: block ids per in-arrow,
        // blocks formed within each source object
        let partition_of = |f: ArrId| -> Vec<u32> {
            let comp = &composites[&f];
            let mut blocks: HashMap<(ObjId, ArrId), u32> = HashMap::new();
            let mut out = Vec::with_capacity(comp.len());
            let mut next = 0u32;
            for (i, &u) in in_arrows.iter().enumerate() {
                let key = (c.arrow(u).src, comp[i]);
                let id = *blocks.entry(key).or_insert_with(|| {
                    let v = next;
                    next += 1;
                    v
                });
                out.push(id);
            }
            out
        };
        let mut by_partition: BTreeMap<Vec<u32>, Vec<ArrId>> = BTreeMap::new();
        for &f in &out_arrows {
            by_partition.entry(partition_of(f)).or_default().push(f);
        }
        for (partition, fs) in &by_partition {
            // arrows out of x compatible with this kernel partition:
            // their composite vector must be constant on each block
            let compatible: Vec<ArrId> = out_arrows
                .iter()
                .copied()
                .filter(|&g| {
                    let comp = &composites[&g];
                    let mut per_block: HashMap<u32, ArrId> = HashMap::new();
                    for (i, &b) in partition.iter().enumerate() {
                        match per_block.get(&b) {
                            Some(&prev) if prev != comp[i] => return false,
                            Some(_) => {}
                            None => {
                                per_block.insert(b, comp[i]);
                            }
                        }
                    }
                    true
                })
                .collect();
            let mut compatible_by_target: HashMap<ObjId, Vec<ArrId>> = HashMap::new();
            for &g in &compatible {
                compatible_by_target.entry(c.arrow(g).dst).or_default().push(g);
            }
            for &f in fs {
                let y = c.arrow(f).dst;
                let mut ok = true;
                'z: for z in 0..c.objects().len() {
                    let empty = Vec::new();
                    let needed = compatible_by_target.get(&z).unwrap_or(&empty);
                    let mut image: HashMap<ArrId, ArrId> = HashMap::new();
                    for &h in c.hom(y, z) {
                        let hf = c.compose_scratch(h, f, &mut scratch).expect("closed");
                        if image.insert(hf, h).is_some() {
                            ok = false;
                            break 'z;
                        }
                    }
                    if image.len() != needed.len() || needed.iter().any(|g| !image.contains_key(g)) {
                        ok = false;
                        break 'z;
                    }
                }
                strict_epi[f] = ok;
            }
        }
    }
    StrictEpiTable { strict_epi, mono }
}

/// Union-find over fiber points.
struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, a: usize) -> usize {
        let mut a = a;
        while self.parent[a] != a {
            self.parent[a] = self.parent[self.parent[a]];
            a = self.parent[a];
        }
        a
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }

    /// Canonical representative vector (least member of each class).
    fn roots(&mut self) -> Vec<usize> {
        (0..self.parent.len()).map(|a| self.find(a)).collect()
    }
}

/// Kernel partition of a fiber map as a canonical block-id vector.
fn fiber_kernel_blocks(map: &[usize]) -> Vec<u32> {
    let mut block_of_value: HashMap<usize, u32> = HashMap::new();
    let mut out = Vec::with_capacity(map.len());
    let mut next = 0u32;
    for &v in map {
        let id = *block_of_value.entry(v).or_insert_with(|| {
            let b = next;
            next += 1;
            b
        });
        out.push(id);
    }
    out
}

fn strict_epi_table_concrete(c: &FiniteConcreteCategory) -> StrictEpiTable {
    let n_arrows = c.arrows().len();
    let mut strict_epi = vec![false; n_arrows];
    let mut mono = vec![false; n_arrows];
    // memoized restriction tables: (target object, image points, z) ->
    // restriction-of-h -> (arrow, multiplicity)
    let mut restriction_memo: HashMap<(ObjId, Vec<usize>, ObjId), HashMap<Vec<usize>, (ArrId, u32)>> =
        HashMap::new();
    for x in 0..c.objects().len() {
        let fx = c.fiber(x);
        let out_arrows = c.out_arrows(x);
        // group out-arrows by the kernel partition of their fiber map
        let mut by_partition: BTreeMap<Vec<u32>, Vec<ArrId>> = BTreeMap::new();
        for &f in &out_arrows {
            by_partition
                .entry(fiber_kernel_blocks(&c.arrow(f).fiber_map))
                .or_default()
                .push(f);
        }
        for (blocks, fs) in &by_partition {
            // the coequalizing demand of this partition: pairs of fiber
            // points that every compatible arrow must identify, generated
            // by parallel arrow pairs whose maps agree block-wise
            let mut uf = UnionFind::new(fx);
            for v in 0..c.objects().len() {
                // group hom(v, x) by the block-quotient of their maps
                let mut groups: HashMap<Vec<u32>, ArrId> = HashMap::new();
                for &u in c.hom(v, x) {
                    let quotient: Vec<u32> =
                        c.arrow(u).fiber_map.iter().map(|&p| blocks[p]).collect();
                    match groups.get(&quotient) {
                        None => {
                            groups.insert(quotient, u);
                        }
                        Some(&u0) => {
                            let m0 = &c.arrow(u0).fiber_map;
                            let m1 = &c.arrow(u).fiber_map;
                            for i in 0..m0.len() {
                                uf.union(m0[i], m1[i]);
                            }
                        }
                    }
                }
            }
            let gen_roots = uf.roots();
            // arrows out of x whose fiber map is constant on the generated
            // classes are exactly the compatible ones
            let compatible: Vec<ArrId> = out_arrows
                .iter()
                .copied()
                .filter(|&g| {
                    let m = &c.arrow(g).fiber_map;
                    (0..fx).all(|a| m[a] == m[gen_roots[a]])
                })
                .collect();
            let mut compatible_by_target: HashMap<ObjId, Vec<ArrId>> = HashMap::new();
            for &g in &compatible {
                compatible_by_target.entry(c.arrow(g).dst).or_default().push(g);
            }
            // mono for this partition: within each hom(v, x), distinct
            // arrows must have distinct block-quotients
            let is_mono_here = {
                let mut ok = true;
                'v: for v in 0..c.objects().len() {
                    let mut seen: HashMap<Vec<u32>, ArrId> = HashMap::new();
                    for &u in c.hom(v, x) {
                        let quotient: Vec<u32> =
                            c.arrow(u).fiber_map.iter().map(|&p| blocks[p]).collect();
                        if seen.insert(quotient, u).is_some() {
                            ok = false;
                            break 'v;
                        }
                    }
                }
                ok
            };
            for &f in fs {
                mono[f] = is_mono_here;
                let fm = &c.arrow(f).fiber_map;
                let y = c.arrow(f).dst;
                // image points in order, one preimage for each, and a
                // point-level lookup from source point to chosen preimage
                let mut image: Vec<usize> = Vec::new();
                let mut preimage: Vec<usize> = Vec::new();
                let mut pre_of = vec![usize::MAX; c.fiber(y)];
                for (p, &q) in fm.iter().enumerate() {
                    if pre_of[q] == usize::MAX {
                        pre_of[q] = p;
                        image.push(q);
                        preimage.push(p);
                    }
                }
                let mut ok = true;
                'zloop: for (&z, gs) in &compatible_by_target {
                    let table = restriction_memo
                        .entry((y, image.clone(), z))
                        .or_insert_with(|| {
                            let mut t: HashMap<Vec<usize>, (ArrId, u32)> = HashMap::new();
                            for &h in c.hom(y, z) {
                                let hm = &c.arrow(h).fiber_map;
                                let restricted: Vec<usize> =
                                    image.iter().map(|&q| hm[q]).collect();
                                t.entry(restricted)
                                    .and_modify(|e| e.1 += 1)
                                    .or_insert((h, 1));
                            }
                            t
                        });
                    for &g in gs {
                        let gm = &c.arrow(g).fiber_map;
                        // factorization requires g constant on fibers of f
                        if !(0..fx).all(|a| gm[a] == gm[pre_of[fm[a]]]) {
                            ok = false;
                            break 'zloop;
                        }
                        let induced: Vec<usize> = preimage.iter().map(|&p| gm[p]).collect();
                        match table.get(&induced) {
                            Some(&(_, 1)) => {}
                            _ => {
                                ok = false;
                                break 'zloop;
                            }
                        }
                    }
                }
                strict_epi[f] = ok;
            }
        }
    }
    StrictEpiTable { strict_epi, mono }
}

/// Single-arrow strict-epi check (exhaustive over the whole category).
pub fn is_strict_epi(c: &FiniteConcreteCategory, f: ArrId) -> Result<bool> {
    if f >= c.arrows().len() {
        return Err(Error::ArrowNotInCategory(f));
    }
    Ok(strict_epi_table(c).is_strict_epi(f))
}

/// Strict epi - mono factorization of `f`, searched among the
/// materialized objects: `f = i . e` with `e` strict epi and `i` mono.
///
/// Candidates are guided by the fiber image; if no candidate verifies,
/// the search falls back to all (object, e, i) triples before reporting
/// the image object missing.
pub fn epi_mono_factor(
    c: &FiniteConcreteCategory,
    table: &StrictEpiTable,
    f: ArrId,
) -> Result<(ArrId, ArrId)> {
    if f >= c.arrows().len() {
        return Err(Error::ArrowNotInCategory(f));
    }
    let a = c.arrow(f);
    let image_size = {
        let mut seen: Vec<bool> = vec![false; c.fiber(a.dst)];
        for &v in &a.fiber_map {
            seen[v] = true;
        }
        seen.iter().filter(|&&b| b).count()
    };
    // fiber-guided pass, then exhaustive pass
    for guided in [true, false] {
        for mid in 0..c.objects().len() {
            if guided && c.fiber(mid) != image_size {
                continue;
            }
            for &e in c.hom(a.src, mid) {
                if !table.is_strict_epi(e) {
                    continue;
                }
                for &i in c.hom(mid, a.dst) {
                    if table.is_mono(i) && c.compose(i, e)? == f {
                        return Ok((e, i));
                    }
                }
            }
        }
    }
    Err(Error::NoImageObject { arrow: f })
}

// ---------------------------------------------------------------------------
// G-set category builder
// ---------------------------------------------------------------------------

/// A materialized category of finite group or monoid actions, remembering
/// the action behind every object.
#[derive(Debug, Clone)]
pub struct ActionCategory {
    pub category: FiniteConcreteCategory,
    /// The action realizing each object; fibers coincide with the points.
    pub actions: Vec<Arc<GAction>>,
}

/// Builds the category of actions of `g` on at most `max_points` points.
///
/// Objects always include the empty action and one representative per
/// isomorphism class of transitive actions. Classes of disconnected
/// actions (orbit multisets) are added layer by layer — all classes of
/// total size `t`, then `t + 1`, ... — as long as the object and arrow
/// caps hold. `complete_upto` records the last fully materialized layer.
/// Arrows are all equivariant maps; the fiber functor is the point set.
pub fn build_gset_category(
    g: &Arc<FiniteGroup>,
    max_points: usize,
    caps: &Caps,
) -> Result<ActionCategory> {
    caps.check_group_size(g.size())?;
    let transitive: Vec<Arc<GAction>> = action::classify_transitive(g, caps)?
        .into_iter()
        .filter(|a| a.points() <= max_points)
        .map(Arc::new)
        .collect();
    build_action_category(
        format!("{}-sets", g.name()),
        Actor::Group(g.clone()),
        &transitive,
        max_points,
        caps,
    )
}

/// Shared builder over a list of connected (transitive) representatives.
fn build_action_category(
    name: String,
    actor: Actor,
    transitive: &[Arc<GAction>],
    max_points: usize,
    caps: &Caps,
) -> Result<ActionCategory> {
    // labels: point count plus a/b/c... among classes of equal size
    let labels: Vec<String> = {
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for t in transitive {
            *counts.entry(t.points()).or_default() += 1;
        }
        let mut seen: BTreeMap<usize, usize> = BTreeMap::new();
        transitive
            .iter()
            .map(|t| {
                let n = t.points();
                let k = seen.entry(n).or_default();
                let label = if counts[&n] > 1 {
                    format!("{}{}", n, (b'a' + *k as u8) as char)
                } else {
                    format!("{n}")
                };
                *k += 1;
                label
            })
            .collect()
    };
    // hom counts between transitive representatives
    let k = transitive.len();
    let mut cnt = vec![vec![0usize; k]; k];
    for i in 0..k {
        for j in 0..k {
            cnt[i][j] = action::hom_actions(&transitive[i], &transitive[j])?.len();
        }
    }
    let hom_count = |xs: &[usize], ys: &[usize]| -> usize {
        xs.iter()
            .map(|&i| ys.iter().map(|&j| cnt[i][j]).sum::<usize>())
            .product()
    };
    // mandatory objects: empty + transitive singletons
    let mut multisets: Vec<Vec<usize>> = vec![vec![]];
    multisets.extend((0..k).map(|i| vec![i]));
    let mut arrow_total: usize = {
        let mut total = 0;
        for a in &multisets {
            for b in &multisets {
                total += hom_count(a, b);
            }
        }
        total
    };
    // layer by layer: all multisets with >= 2 components and total t
    let mut complete_upto = 1.min(max_points);
    'layers: for t in 2..=max_points {
        let layer: Vec<Vec<usize>> = multisets_of_total(transitive, t)
            .into_iter()
            .filter(|m| m.len() >= 2)
            .collect();
        // cost of the whole layer
        let mut extra = 0usize;
        for m in &layer {
            for existing in &multisets {
                extra += hom_count(m, existing) + hom_count(existing, m);
            }
            extra += hom_count(m, m);
            // pairs within the layer itself
            for other in &layer {
                if other < m {
                    extra += hom_count(m, other) + hom_count(other, m);
                }
            }
        }
        if multisets.len() + layer.len() > caps.objects || arrow_total + extra > caps.arrows {
            break 'layers;
        }
        arrow_total += extra;
        multisets.extend(layer);
        complete_upto = t;
    }
    // if no transitive object exceeds complete_upto... larger transitive
    // objects are still mandatory members; completeness bound is unchanged.
    multisets.sort_by_key(|m| {
        (
            m.iter().map(|&i| transitive[i].points()).sum::<usize>(),
            m.clone(),
        )
    });
    // materialize actions and objects
    let mut actions: Vec<Arc<GAction>> = Vec::with_capacity(multisets.len());
    let mut objects = Vec::with_capacity(multisets.len());
    for m in &multisets {
        let act = if m.is_empty() {
            Arc::new(GAction::new("0", actor.clone(), 0, vec![]).expect("empty action"))
        } else {
            let mut acc = (*transitive[m[0]]).clone();
            for &i in &m[1..] {
                acc = acc.disjoint_union(&transitive[i])?;
            }
            Arc::new(acc)
        };
        let name = if m.is_empty() {
            "0".to_string()
        } else {
            m.iter().map(|&i| labels[i].clone()).collect::<Vec<_>>().join("+")
        };
        objects.push(Object {
            name,
            fiber: act.points(),
        });
        actions.push(act);
    }
    // arrows: all equivariant maps
    let mut arrows = Vec::new();
    for (xi, x) in actions.iter().enumerate() {
        for (yi, y) in actions.iter().enumerate() {
            for (n, h) in action::hom_actions(x, y)?.into_iter().enumerate() {
                arrows.push(Arrow {
                    name: format!("{}->{}#{}", objects[xi].name, objects[yi].name, n),
                    src: xi,
                    dst: yi,
                    fiber_map: h.map().to_vec(),
                });
            }
        }
    }
    let category = FiniteConcreteCategory::new_concrete(name, objects, arrows, complete_upto)?;
    Ok(ActionCategory { category, actions })
}

/// All multisets of transitive-class indices with the given total size,
/// ascending lexicographically.
fn multisets_of_total(transitive: &[Arc<GAction>], total: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(
        transitive: &[Arc<GAction>],
        remaining: usize,
        min_class: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if remaining == 0 {
            out.push(current.clone());
            return;
        }
        for i in min_class..transitive.len() {
            let p = transitive[i].points();
            if p == 0 || p > remaining {
                continue;
            }
            current.push(i);
            rec(transitive, remaining - p, i, current, out);
            current.pop();
        }
    }
    rec(transitive, total, 0, &mut current, &mut out);
    out
}

/// The connected counterpart: one object per transitive class, no empty
/// object, all equivariant maps. `complete_upto` is `max_points` — every
/// connected class that small is present.
pub fn build_transitive_gset_category(
    g: &Arc<FiniteGroup>,
    max_points: usize,
    caps: &Caps,
) -> Result<ActionCategory> {
    caps.check_group_size(g.size())?;
    let transitive: Vec<Arc<GAction>> = action::classify_transitive(g, caps)?
        .into_iter()
        .filter(|a| a.points() <= max_points)
        .map(Arc::new)
        .collect();
    let mut out = build_action_category(
        format!("t{}-sets", g.name()),
        Actor::Group(g.clone()),
        &transitive,
        0, // no disconnected layers
        caps,
    )?;
    // drop the empty object (index 0 after sorting: fiber 0)
    let keep: Vec<ObjId> = (0..out.category.objects().len())
        .filter(|&x| out.category.fiber(x) > 0)
        .collect();
    let (category, kept) = out
        .category
        .full_subcategory(format!("t{}-sets", g.name()), &keep, max_points)?;
    let actions = kept.iter().map(|&x| out.actions[x].clone()).collect();
    out.category = category;
    out.actions = actions;
    Ok(out)
}

// ---------------------------------------------------------------------------
// M-set category builder
// ---------------------------------------------------------------------------

/// Builds the category of all actions of a finite monoid on at most
/// `max_points` points, one object per isomorphism class, with all
/// equivariant maps. Classes are enumerated by brute force over action
/// tables and canonicalized under point relabeling, so this is only for
/// small monoids and small point counts.
pub fn build_mset_category(
    m: &Arc<FiniteMonoid>,
    max_points: usize,
    caps: &Caps,
) -> Result<ActionCategory> {
    caps.check_points(max_points)?;
    let mut actions: Vec<Arc<GAction>> = Vec::new();
    let mut objects: Vec<Object> = Vec::new();
    for n in 0..=max_points {
        let mut canon_seen: Vec<Vec<usize>> = Vec::new();
        for table in enumerate_monoid_actions(m, n) {
            let canon = canonical_action_table(m, n, &table);
            if canon_seen.contains(&canon) {
                continue;
            }
            canon_seen.push(canon.clone());
            let act = Arc::new(GAction::new(
                format!("M{}#{}", n, canon_seen.len() - 1),
                Actor::Monoid(m.clone()),
                n,
                canon,
            )?);
            objects.push(Object {
                name: format!("{}#{}", n, canon_seen.len() - 1),
                fiber: n,
            });
            actions.push(act);
        }
    }
    let mut arrows = Vec::new();
    for (xi, x) in actions.iter().enumerate() {
        for (yi, y) in actions.iter().enumerate() {
            for (n, h) in action::hom_actions(x, y)?.into_iter().enumerate() {
                arrows.push(Arrow {
                    name: format!("{}->{}#{}", objects[xi].name, objects[yi].name, n),
                    src: xi,
                    dst: yi,
                    fiber_map: h.map().to_vec(),
                });
            }
        }
    }
    let category = FiniteConcreteCategory::new_concrete(
        format!("{}-sets", m.name),
        objects,
        arrows,
        max_points,
    )?;
    Ok(ActionCategory { category, actions })
}

/// All action tables of `m` on `n` points (identity row forced, the rest
/// filled by backtracking with the compatibility law checked on the fly).
fn enumerate_monoid_actions(m: &FiniteMonoid, n: usize) -> Vec<Vec<usize>> {
    let size = m.size();
    let mut out = Vec::new();
    let mut table = vec![usize::MAX; size * n];
    for x in 0..n {
        table[m.identity() * n + x] = x;
    }
    fn rec(m: &FiniteMonoid, n: usize, table: &mut Vec<usize>, pos: usize, out: &mut Vec<Vec<usize>>) {
        let size = m.size();
        if pos == size * n {
            // final full law check
            let ok = (0..size).all(|a| {
                (0..size).all(|b| {
                    (0..n).all(|x| table[m.mul(a, b) * n + x] == table[a * n + table[b * n + x]])
                })
            });
            if ok {
                out.push(table.clone());
            }
            return;
        }
        if table[pos] != usize::MAX {
            rec(m, n, table, pos + 1, out);
            return;
        }
        for v in 0..n {
            table[pos] = v;
            // partial consistency on fully determined triples
            let consistent = (0..size).all(|a| {
                (0..size).all(|b| {
                    (0..n).all(|x| {
                        let bx = table[b * n + x];
                        if bx == usize::MAX {
                            return true;
                        }
                        let lhs = table[m.mul(a, b) * n + x];
                        let rhs = table[a * n + bx];
                        lhs == usize::MAX || rhs == usize::MAX || lhs == rhs
                    })
                })
            });
            if consistent {
                rec(m, n, table, pos + 1, out);
            }
        }
        table[pos] = usize::MAX;
    }
    rec(m, n, &mut table, 0, &mut out);
    out
}

/// Least action table over all relabelings of the points.
fn canonical_action_table(m: &FiniteMonoid, n: usize, table: &[usize]) -> Vec<usize> {
    let size = m.size();
    let mut best: Option<Vec<usize>> = None;
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let mut relabeled = vec![0usize; size * n];
        for g in 0..size {
            for x in 0..n {
                relabeled[g * n + perm[x]] = perm[table[g * n + x]];
            }
        }
        if best.as_ref().map_or(true, |b| relabeled < *b) {
            best = Some(relabeled);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    best.unwrap_or_default()
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{cyclic, idempotent_monoid, symmetric};

    #[test]
    fn gset_category_contains_transitive_objects_and_empty() {
        let g = Arc::new(symmetric(3));
        let caps = Caps::default();
        let built = build_gset_category(&g, 6, &caps).unwrap();
        let c = &built.category;
        // empty object present
        assert!(c.objects().iter().any(|o| o.fiber == 0));
        // the four transitive classes present
        for points in [1, 2, 3, 6] {
            assert!(
                built
                    .actions
                    .iter()
                    .any(|a| a.points() == points && action::is_transitive(a).unwrap()),
                "missing transitive object on {points} points"
            );
        }
        assert!(c.complete_upto >= 2, "at least the two-point layer should fit");
    }

    #[test]
    fn gset_category_is_closed_and_has_identities() {
        let g = Arc::new(cyclic(4));
        let caps = Caps::default();
        let built = build_gset_category(&g, 4, &caps).unwrap();
        let c = &built.category;
        for x in 0..c.objects().len() {
            let id = c.identity(x);
            assert_eq!(c.arrow(id).src, x);
        }
        // identity laws through compose
        for f in 0..c.arrows().len() {
            let a = c.arrow(f);
            assert_eq!(c.compose(c.identity(a.dst), f).unwrap(), f);
            assert_eq!(c.compose(f, c.identity(a.src)).unwrap(), f);
        }
    }

    #[test]
    fn identity_is_strict_epi_and_inclusions_are_not() {
        let g = Arc::new(symmetric(3));
        let caps = Caps::default();
        let built = build_gset_category(&g, 6, &caps).unwrap();
        let c = &built.category;
        let table = strict_epi_table(c);
        for x in 0..c.objects().len() {
            assert!(table.is_strict_epi(c.identity(x)), "identity must be strict epi");
        }
        // a non-surjective (on fibers) map between nonempty objects is not
        // a strict epi in G-sets
        let non_surjective = (0..c.arrows().len()).find(|&f| {
            let a = c.arrow(f);
            c.fiber(a.src) > 0
                && a.fiber_map.len() < c.fiber(a.dst)
        });
        if let Some(f) = non_surjective {
            assert!(!table.is_strict_epi(f));
        }
    }

    #[test]
    fn orbit_projection_is_strict_epi() {
        let g = Arc::new(symmetric(3));
        let caps = Caps::default();
        let built = build_gset_category(&g, 6, &caps).unwrap();
        let c = &built.category;
        let table = strict_epi_table(c);
        // regular object (6 points, transitive) onto the 3-point orbit
        let reg = built
            .actions
            .iter()
            .position(|a| a.points() == 6 && action::is_transitive(a).unwrap())
            .unwrap();
        let three = built
            .actions
            .iter()
            .position(|a| a.points() == 3 && action::is_transitive(a).unwrap())
            .unwrap();
        let f = c.hom(reg, three)[0];
        assert!(table.is_strict_epi(f));
        // and fiber-surjectivity matches strict-epi-ness for maps between
        // transitive objects here
    }

    #[test]
    fn epi_mono_factorization_through_image() {
        let g = Arc::new(symmetric(3));
        let caps = Caps::default();
        let built = build_gset_category(&g, 6, &caps).unwrap();
        let c = &built.category;
        let table = strict_epi_table(c);
        for f in 0..c.arrows().len() {
            let (e, i) = epi_mono_factor(c, &table, f).expect("factorization exists");
            assert_eq!(c.compose(i, e).unwrap(), f);
            assert!(table.is_strict_epi(e));
            assert!(c.is_mono(i));
        }
    }

    #[test]
    fn mono_iff_injective_fiber_in_gsets() {
        let g = Arc::new(cyclic(4));
        let caps = Caps::default();
        let built = build_gset_category(&g, 4, &caps).unwrap();
        let c = &built.category;
        for f in 0..c.arrows().len() {
            let a = c.arrow(f);
            let mut seen = vec![false; c.fiber(a.dst)];
            let mut injective = true;
            for &v in &a.fiber_map {
                if seen[v] {
                    injective = false;
                }
                seen[v] = true;
            }
            assert_eq!(c.is_mono(f), injective, "mono test disagrees with fibers");
        }
    }

    #[test]
    fn automorphism_group_of_regular_object() {
        let g = Arc::new(symmetric(3));
        let caps = Caps::default();
        let built = build_transitive_gset_category(&g, 6, &caps).unwrap();
        let c = &built.category;
        let reg = built.actions.iter().position(|a| a.points() == 6).unwrap();
        let (aut, _) = c.automorphism_group(reg).unwrap();
        assert_eq!(aut.size(), 6);
        // endomorphisms of a transitive object are automorphisms here
        let (endo, _) = c.endo_monoid(reg).unwrap();
        assert_eq!(endo.size(), 6);
    }

    #[test]
    fn mset_category_small_monoid() {
        let m = Arc::new(idempotent_monoid());
        let caps = Caps::default();
        let built = build_mset_category(&m, 2, &caps).unwrap();
        let c = &built.category;
        // n=0: 1 class; n=1: 1 class; n=2: classes of (id, idempotent):
        // the free M-set, the 2-point trivial, and the "collapse" action
        assert!(c.objects().len() >= 4);
        assert!(c.is_concrete());
        // identities exist everywhere
        for x in 0..c.objects().len() {
            assert_eq!(c.arrow(c.identity(x)).src, x);
        }
    }

    #[test]
    fn concrete_and_generic_strict_epi_paths_agree() {
        // small enough for the generic (pair-composing) path, rich enough
        // to have monos, strict epis, and arrows that are neither
        let g = Arc::new(symmetric(3));
        let caps = Caps {
            arrows: 400,
            ..Caps::default()
        };
        let built = build_gset_category(&g, 6, &caps).unwrap();
        let concrete = &built.category;
        let tabled = concrete.with_explicit_table().unwrap();
        let fast = strict_epi_table(concrete);
        let slow = strict_epi_table(&tabled);
        for f in 0..concrete.arrows().len() {
            assert_eq!(
                fast.is_strict_epi(f),
                slow.is_strict_epi(f),
                "strict-epi flag differs at arrow {}",
                concrete.arrow(f).name
            );
            assert_eq!(
                fast.is_mono(f),
                slow.is_mono(f),
                "mono flag differs at arrow {}",
                concrete.arrow(f).name
            );
        }
    }

    #[test]
    fn table_mode_catches_broken_functoriality() {
        // two objects, an arrow with a fiber map that contradicts the
        // declared composite
        let objects = vec![
            Object { name: "A".into(), fiber: 1 },
            Object { name: "B".into(), fiber: 1 },
        ];
        let arrows = vec![
            Arrow { name: "idA".into(), src: 0, dst: 0, fiber_map: vec![0] },
            Arrow { name: "idB".into(), src: 1, dst: 1, fiber_map: vec![0] },
            Arrow { name: "f".into(), src: 0, dst: 1, fiber_map: vec![0] },
        ];
        let mut table = HashMap::new();
        table.insert((0, 0), 0);
        table.insert((1, 1), 1);
        table.insert((2, 0), 2);
        table.insert((1, 2), 2);
        let ok = FiniteConcreteCategory::new_with_table(
            "tiny",
            objects.clone(),
            arrows.clone(),
            vec![0, 1],
            table.clone(),
            1,
        );
        assert!(ok.is_ok());
        // break associativity/identity by pointing a composite at the
        // wrong arrow
        table.insert((1, 2), 0);
        let bad = FiniteConcreteCategory::new_with_table(
            "tiny-broken",
            objects,
            arrows,
            vec![0, 1],
            table,
            1,
        );
        assert!(bad.is_err());
    }
}
