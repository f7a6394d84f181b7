//! Census of all algebras of each size: class counts, non-null comaximal
//! graph counts, graph-shape multisets and per-algebra catalog records.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{ClassFlags, ResiduatedLattice};
use crate::filters::all_filters;
use crate::graph::{
    canonical_graph_form, comaximal_filter_graph, invariants_with_partition, maximal_partition, Extended,
};

use super::complete::completions;
use super::skeleton::enumerate_skeletons;

/// Classes tracked by the census. `NonPrelinear` is the complement of MTL.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AlgebraClass {
    All,
    Mtl,
    Bl,
    Heyting,
    Godel,
    Mv,
    NonPrelinear,
}

impl AlgebraClass {
    pub const ALL: [AlgebraClass; 7] = [
        AlgebraClass::All,
        AlgebraClass::Mtl,
        AlgebraClass::Bl,
        AlgebraClass::Heyting,
        AlgebraClass::Godel,
        AlgebraClass::Mv,
        AlgebraClass::NonPrelinear,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AlgebraClass::All => "all",
            AlgebraClass::Mtl => "mtl",
            AlgebraClass::Bl => "bl",
            AlgebraClass::Heyting => "heyting",
            AlgebraClass::Godel => "godel",
            AlgebraClass::Mv => "mv",
            AlgebraClass::NonPrelinear => "non-prelinear",
        }
    }

    pub fn contains(self, flags: &ClassFlags) -> bool {
        match self {
            AlgebraClass::All => true,
            AlgebraClass::Mtl => flags.mtl,
            AlgebraClass::Bl => flags.bl,
            AlgebraClass::Heyting => flags.heyting,
            AlgebraClass::Godel => flags.godel,
            AlgebraClass::Mv => flags.mv,
            AlgebraClass::NonPrelinear => !flags.prelinear,
        }
    }
}

impl fmt::Display for AlgebraClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AlgebraClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        AlgebraClass::ALL
            .into_iter()
            .find(|c| c.name() == s.to_ascii_lowercase())
            .ok_or_else(|| format!("unknown class `{s}` (expected all, mtl, bl, heyting, godel, mv or non-prelinear)"))
    }
}

/// Graph part of a catalog record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRecord {
    pub vertices: usize,
    pub edges: usize,
    pub diameter: Extended,
    pub girth: Extended,
    pub omega: usize,
    pub chi: usize,
    pub planar: bool,
    pub canonical_graph_form: String,
}

/// One enumerated algebra, as persisted in a catalog.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogRecord {
    pub size: usize,
    pub canonical_key: String,
    pub flags: ClassFlags,
    pub filter_count: usize,
    pub max_filter_count: usize,
    pub radical_size: usize,
    pub graph: GraphRecord,
}

impl CatalogRecord {
    /// Computes the record of an algebra whose canonical key is known.
    pub fn describe(a: &ResiduatedLattice, canonical_key: &[u8]) -> Self {
        let fl = all_filters(a);
        let g = comaximal_filter_graph(a, &fl);
        let partition = maximal_partition(&fl, &g);
        let inv = invariants_with_partition(&g, &partition, fl.maximal.len());
        CatalogRecord {
            size: a.size(),
            canonical_key: hex::encode(canonical_key),
            flags: a.classify(),
            filter_count: fl.all.len(),
            max_filter_count: fl.maximal.len(),
            radical_size: fl.radical().len(),
            graph: GraphRecord {
                vertices: inv.vertex_count,
                edges: inv.edge_count,
                diameter: inv.diameter,
                girth: inv.girth,
                omega: inv.clique_number,
                chi: inv.chromatic_number,
                planar: inv.planar,
                canonical_graph_form: hex::encode(canonical_graph_form(&g)),
            },
        }
    }

    pub fn graph_is_null(&self) -> bool {
        self.graph.vertices == 0
    }
}

/// Counts per class, in the order all, mtl, bl, heyting, godel, mv,
/// non-prelinear.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ClassCounts {
    pub all: usize,
    pub mtl: usize,
    pub bl: usize,
    pub heyting: usize,
    pub godel: usize,
    pub mv: usize,
    pub non_prelinear: usize,
}

impl ClassCounts {
    pub fn get(&self, class: AlgebraClass) -> usize {
        match class {
            AlgebraClass::All => self.all,
            AlgebraClass::Mtl => self.mtl,
            AlgebraClass::Bl => self.bl,
            AlgebraClass::Heyting => self.heyting,
            AlgebraClass::Godel => self.godel,
            AlgebraClass::Mv => self.mv,
            AlgebraClass::NonPrelinear => self.non_prelinear,
        }
    }

    fn slot(&mut self, class: AlgebraClass) -> &mut usize {
        match class {
            AlgebraClass::All => &mut self.all,
            AlgebraClass::Mtl => &mut self.mtl,
            AlgebraClass::Bl => &mut self.bl,
            AlgebraClass::Heyting => &mut self.heyting,
            AlgebraClass::Godel => &mut self.godel,
            AlgebraClass::Mv => &mut self.mv,
            AlgebraClass::NonPrelinear => &mut self.non_prelinear,
        }
    }
}

/// Multiset of canonical graph forms (hex) of non-null comaximal graphs.
pub type ShapeMultiset = BTreeMap<String, usize>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRow {
    pub size: usize,
    pub counts: ClassCounts,
    pub nonnull: ClassCounts,
    pub shapes: BTreeMap<AlgebraClass, ShapeMultiset>,
}

impl CensusRow {
    pub fn from_records(size: usize, records: &[CatalogRecord]) -> Self {
        let mut row = CensusRow {
            size,
            counts: ClassCounts::default(),
            nonnull: ClassCounts::default(),
            shapes: AlgebraClass::ALL
                .into_iter()
                .map(|c| (c, ShapeMultiset::new()))
                .collect(),
        };
        for r in records {
            for class in AlgebraClass::ALL {
                if !class.contains(&r.flags) {
                    continue;
                }
                *row.counts.slot(class) += 1;
                if !r.graph_is_null() {
                    *row.nonnull.slot(class) += 1;
                    *row.shapes
                        .get_mut(&class)
                        .unwrap()
                        .entry(r.graph.canonical_graph_form.clone())
                        .or_default() += 1;
                }
            }
        }
        row
    }

    pub fn shapes(&self, class: AlgebraClass) -> &ShapeMultiset {
        &self.shapes[&class]
    }
}

#[derive(Clone, Debug, Default)]
pub struct CensusOptions {
    /// Worker threads; 0 uses rayon's default.
    pub jobs: usize,
    /// Wall-clock budget for the whole run.
    pub budget: Option<Duration>,
    /// Emit `size/skeleton-index/completions-found` lines on stderr.
    pub progress: bool,
}

/// All algebras of one size with their records, in canonical-key order.
#[derive(Clone, Debug)]
pub struct SizeCensus {
    pub row: CensusRow,
    pub records: Vec<CatalogRecord>,
}

/// Census results, plus the sizes the budget did not allow.
#[derive(Clone, Debug, Default)]
pub struct Census {
    pub sizes: Vec<SizeCensus>,
    pub skipped: Vec<usize>,
}

impl Census {
    pub fn rows(&self) -> impl Iterator<Item = &CensusRow> {
        self.sizes.iter().map(|s| &s.row)
    }

    pub fn records(&self) -> impl Iterator<Item = &CatalogRecord> {
        self.sizes.iter().flat_map(|s| s.records.iter())
    }

    pub fn budget_exceeded(&self) -> bool {
        !self.skipped.is_empty()
    }
}

/// Enumerates every algebra of size `n` and computes its record. Returns
/// `None` if the deadline passes first.
pub fn census_size(n: usize, opts: &CensusOptions, deadline: Option<Instant>) -> Option<SizeCensus> {
    let skeletons = enumerate_skeletons(n);
    let found = AtomicUsize::new(0);
    let expired = AtomicBool::new(false);
    let work = |(i, sk): (usize, &super::LatticeSkeleton)| -> Vec<CatalogRecord> {
        if expired.load(Ordering::Relaxed) || deadline.is_some_and(|d| Instant::now() > d) {
            expired.store(true, Ordering::Relaxed);
            return Vec::new();
        }
        let records: Vec<CatalogRecord> = completions(sk)
            .iter()
            .map(|c| CatalogRecord::describe(&c.algebra, &c.key))
            .collect();
        let total = found.fetch_add(records.len(), Ordering::Relaxed) + records.len();
        if opts.progress {
            eprintln!("{n}/{i}/{total}");
        }
        records
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .expect("thread pool");
    let mut records: Vec<CatalogRecord> =
        pool.install(|| skeletons.par_iter().enumerate().flat_map_iter(work).collect());
    if expired.load(Ordering::Relaxed) {
        return None;
    }
    records.sort_by(|a, b| a.canonical_key.cmp(&b.canonical_key));
    let row = CensusRow::from_records(n, &records);
    Some(SizeCensus { row, records })
}

/// Census for sizes `1..=n_max`. Once the budget runs out, the current
/// and all later sizes are reported as skipped.
pub fn census(n_max: usize, opts: &CensusOptions) -> Census {
    let deadline = opts.budget.map(|b| Instant::now() + b);
    let mut out = Census::default();
    for n in 1..=n_max {
        if !out.skipped.is_empty() {
            out.skipped.push(n);
            continue;
        }
        match census_size(n, opts, deadline) {
            Some(s) => out.sizes.push(s),
            None => out.skipped.push(n),
        }
    }
    out
}

/// Canonical graph forms of the non-null comaximal graphs of size-`n`
/// algebras in `class`, with multiplicities.
pub fn shape_census(n: usize, class: AlgebraClass) -> ShapeMultiset {
    census_size(n, &CensusOptions::default(), None)
        .expect("no deadline")
        .row
        .shapes
        .remove(&class)
        .unwrap_or_default()
}
