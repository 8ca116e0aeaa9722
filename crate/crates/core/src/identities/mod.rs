//! Identity verification over bounded shards of indices.
//!
//! Every identity is a named check run over all index tuples of a shard.
//! Cases within a shard run in parallel and are collected in enumeration
//! order, so reports are deterministic.

pub mod checks;
pub mod report;

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;

use crate::combin::{compositions_up_to, enumerate_partitions, shifted_weight, vectors_in_box, IntVector};
use crate::families::Families;
use crate::heckeops::relations::{hecke_relations, intertwining_relations, RelationCheck};

pub use report::{IdentityReport, Params, Shard, Status, Witness, WITNESS_LIMIT};

/// Runs one shard, returning the number of cases and the witnesses.
pub type ShardRunner = dyn Fn(&Families, &Shard) -> (usize, Vec<Witness>) + Send + Sync;

#[derive(Clone)]
pub struct RegisteredIdentity {
    pub name: String,
    pub summary: String,
    pub run: Arc<ShardRunner>,
}

/// Named identities, in a fixed order.
#[derive(Clone, Default)]
pub struct Registry {
    entries: BTreeMap<String, RegisteredIdentity>,
}

/// The standard sweep: `n = 1, 2` on entries `−2..3` up to shifted weight 4,
/// and `n = 3` on entries `0..2` up to weight 3.
pub fn default_shards() -> Vec<Shard> {
    vec![
        Shard { n: 1, min_entry: -2, max_entry: 3, max_weight: 4 },
        Shard { n: 2, min_entry: -2, max_entry: 3, max_weight: 4 },
        Shard { n: 3, min_entry: 0, max_entry: 2, max_weight: 3 },
    ]
}

/// Vectors of the shard box whose minimal shift into compositions has
/// weight at most `max_weight`.
pub fn shard_vectors(s: &Shard) -> Vec<IntVector> {
    vectors_in_box(s.n, s.min_entry, s.max_entry)
        .into_iter()
        .filter(|v| shifted_weight(v) <= s.max_weight as i64)
        .collect()
}

/// Compositions of weight at most `max_weight`.
pub fn shard_compositions(s: &Shard) -> Vec<IntVector> {
    compositions_up_to(s.n, s.max_weight)
}

pub fn shard_partitions(s: &Shard) -> Vec<IntVector> {
    (0..=s.max_weight).flat_map(|d| enumerate_partitions(s.n, d)).collect()
}

fn pairs(xs: &[IntVector]) -> Vec<(IntVector, IntVector)> {
    xs.iter().flat_map(|u| xs.iter().map(move |v| (u.clone(), v.clone()))).collect()
}

/// Runs `f` on every item in parallel, keeping enumeration order.
pub fn sweep<T: Sync>(items: &[T], f: impl Fn(&T) -> Vec<Witness> + Sync + Send) -> (usize, Vec<Witness>) {
    let ws: Vec<Vec<Witness>> = items.par_iter().map(f).collect();
    (items.len(), ws.into_iter().flatten().collect())
}

fn relation_witnesses(checks: Vec<RelationCheck>) -> (usize, Vec<Witness>) {
    let cases = checks.iter().map(|c| c.checked).sum();
    let ws = checks
        .into_iter()
        .filter_map(|c| {
            let f = c.failure?;
            let mut indices = BTreeMap::new();
            indices.insert("monomial".to_string(), f.monomial);
            Some(Witness {
                case: c.name,
                indices,
                lhs: report::truncate(f.lhs.render()),
                rhs: report::truncate(f.rhs.render()),
            })
        })
        .collect();
    (cases, ws)
}

impl Registry {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn register(
        &mut self,
        name: &str,
        summary: &str,
        run: impl Fn(&Families, &Shard) -> (usize, Vec<Witness>) + Send + Sync + 'static,
    ) {
        self.entries.insert(
            name.to_string(),
            RegisteredIdentity { name: name.to_string(), summary: summary.to_string(), run: Arc::new(run) },
        );
    }

    pub fn get(&self, name: &str) -> Option<&RegisteredIdentity> {
        self.entries.get(name)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }

    pub fn iter(&self) -> impl Iterator<Item = &RegisteredIdentity> {
        self.entries.values()
    }

    /// Runs `name` over `shards`. Returns `None` for an unknown name.
    pub fn run(&self, name: &str, fam: &Families, shards: &[Shard], timings: bool) -> Option<IdentityReport> {
        let id = self.get(name)?;
        let start = Instant::now();
        let mut cases = 0;
        let mut witnesses = Vec::new();
        for s in shards {
            let (c, w) = (id.run)(fam, s);
            cases += c;
            witnesses.extend(w);
        }
        let status = if witnesses.is_empty() { Status::Pass } else { Status::Fail };
        Some(IdentityReport {
            identity: id.name.clone(),
            params: Params { shards: shards.to_vec(), cases },
            status,
            witnesses,
            elapsed_ms: timings.then(|| start.elapsed().as_millis() as u64),
        })
    }

    /// Every identity of the library.
    pub fn standard() -> Self {
        let mut r = Registry::new();
        r.register("duality", "K_u(a v~) = K_v(a u~)", |f, s| {
            sweep(&pairs(&shard_vectors(s)), |(u, v)| checks::duality(f, u, v))
        });
        r.register("twisted-duality", "(H_w0 K_u)(a v~) = (H_w0 K_v)(a u~)", |f, s| {
            sweep(&pairs(&shard_vectors(s)), |(u, v)| checks::twisted_duality(f, u, v))
        });
        r.register("primed-duality", "K'_v(a^-1 u-) = K'_u(a^-1 v-)", |f, s| {
            sweep(&pairs(&shard_vectors(s)), |(u, v)| checks::primed_duality(f, u, v))
        });
        r.register("theorem-a", "operator construction of G' and the Laurent inversion", |f, s| {
            let (c1, mut w1) = sweep(&shard_compositions(s), |a| checks::primed_construction(f, a));
            let (c2, w2) = sweep(&shard_vectors(s), |u| checks::inversion(f, u));
            w1.extend(w2);
            (c1 + c2, w1)
        });
        r.register("theorem-c", "O_alpha(beta-^-1) = K_beta(a alpha~)", |f, s| {
            sweep(&pairs(&shard_compositions(s)), |(a, b)| checks::o_duality(f, a, b))
        });
        r.register("binomial", "binomial formula and its rewritten forms", |f, s| {
            sweep(&shard_compositions(s), |a| checks::binomial(f, a))
        });
        r.register("dual-binomial", "dual binomial formula and its rewritten form", |f, s| {
            sweep(&shard_compositions(s), |a| checks::dual_binomial(f, a))
        });
        r.register("orthogonality", "binomial coefficients are mutually inverse", |f, s| {
            sweep(&pairs(&shard_compositions(s)), |(a, g)| checks::orthogonality(f, a, g))
        });
        r.register("okounkov", "symmetric duality and the symmetrizer relation", |f, s| {
            let parts = shard_partitions(s);
            let (c1, mut w1) = sweep(&pairs(&parts), |(l, m)| checks::okounkov(f, l, m));
            let (c2, w2) = sweep(&parts, |l| checks::symmetrizer(f, l));
            w1.extend(w2);
            (c1 + c2, w1)
        });
        r.register("transfer", "operators on K and Kbar against hat operators", |f, s| {
            sweep(&shard_vectors(s), |v| checks::transfer(f, v))
        });
        r.register("eval-relations", "principal evaluations of G, G° and G'", |f, s| {
            sweep(&shard_compositions(s), |a| checks::eval_relations(f, a))
        });
        r.register("hecke-relations", "Hecke, braid and intertwining relations on monomials", |_, s| {
            let d = s.max_weight.min(3);
            let mut all = intertwining_relations(s.n, d);
            if s.n >= 2 {
                all.extend(hecke_relations(s.n, d));
            }
            relation_witnesses(all)
        });
        r.register("duality-steps", "exchange, raising and shift relations", |f, s| {
            sweep(&pairs(&shard_vectors(s)), |(u, v)| checks::duality_steps(f, u, v))
        });
        r
    }
}
