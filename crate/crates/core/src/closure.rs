//! Closed item sets of a transactional dataset and their basic antecedents.
//!
//! Mining is the naive intersection closure: every intersection of a
//! nonempty group of transactions is closed, and every closed set with
//! positive support arises that way. The Hasse graph of the closed sets,
//! with weights `ln(max_support / support)`, is a vertex-weighted dag whose
//! tight pairs at `-ln(conf)` are the basic antecedents at confidence `conf`.
//! [`basic_antecedents`] computes the same pairs directly from integer
//! supports with exact rational comparisons.

use std::collections::{HashMap, HashSet};
use std::fmt::{self, Write as _};
use std::str::FromStr;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::graph::{VertexId, VertexWeightedDag};

pub type Item = usize;

/// Sorted, duplicate-free set of item indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ItemSet(Vec<Item>);

impl ItemSet {
    pub fn new(mut items: Vec<Item>) -> Self {
        items.sort_unstable();
        items.dedup();
        ItemSet(items)
    }

    pub fn items(&self) -> &[Item] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_subset(&self, other: &ItemSet) -> bool {
        let mut it = other.0.iter();
        self.0.iter().all(|x| it.any(|y| y == x))
    }

    pub fn is_proper_subset(&self, other: &ItemSet) -> bool {
        self.len() < other.len() && self.is_subset(other)
    }

    pub fn intersection(&self, other: &ItemSet) -> ItemSet {
        ItemSet(self.0.iter().copied().filter(|x| other.0.binary_search(x).is_ok()).collect())
    }

    pub fn difference(&self, other: &ItemSet) -> ItemSet {
        ItemSet(self.0.iter().copied().filter(|x| other.0.binary_search(x).is_err()).collect())
    }

    fn names<'a>(&'a self, items: &'a [String]) -> impl Iterator<Item = &'a str> + 'a {
        self.0.iter().map(move |&i| items[i].as_str())
    }

    /// `{a,b}`; used as the vertex name in the log-scaled dag.
    pub fn label(&self, items: &[String]) -> String {
        format!("{{{}}}", self.names(items).collect::<Vec<_>>().join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransactionalDataset {
    items: Vec<String>,
    transactions: Vec<ItemSet>,
}

impl TransactionalDataset {
    pub fn new(items: Vec<String>, transactions: Vec<ItemSet>) -> Result<Self> {
        for t in &transactions {
            if let Some(&bad) = t.items().iter().find(|&&i| i >= items.len()) {
                return Err(Error::InvalidParameter(format!(
                    "transaction mentions item #{bad} outside the item list"
                )));
            }
        }
        Ok(TransactionalDataset {
            items,
            transactions,
        })
    }

    /// Builds a dataset from item-name lists; items are numbered by first
    /// appearance.
    pub fn from_named<S: AsRef<str>>(transactions: &[Vec<S>]) -> Self {
        let mut items = Vec::new();
        let mut index: HashMap<String, Item> = HashMap::new();
        let transactions = transactions
            .iter()
            .map(|t| {
                ItemSet::new(
                    t.iter()
                        .map(|s| {
                            let s = s.as_ref();
                            *index.entry(s.to_string()).or_insert_with(|| {
                                items.push(s.to_string());
                                items.len() - 1
                            })
                        })
                        .collect(),
                )
            })
            .collect();
        TransactionalDataset {
            items,
            transactions,
        }
    }

    pub fn items(&self) -> &[String] {
        &self.items
    }

    pub fn transactions(&self) -> &[ItemSet] {
        &self.transactions
    }

    pub fn len(&self) -> usize {
        self.transactions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.transactions.is_empty()
    }

    /// Number of transactions containing `set`.
    pub fn support(&self, set: &ItemSet) -> u64 {
        self.transactions.iter().filter(|t| set.is_subset(t)).count() as u64
    }

    /// Intersection of the transactions containing `set`; `None` when no
    /// transaction does.
    pub fn closure(&self, set: &ItemSet) -> Option<ItemSet> {
        self.transactions
            .iter()
            .filter(|t| set.is_subset(t))
            .cloned()
            .reduce(|acc, t| acc.intersection(&t))
    }
}

const EMPTY_TRANSACTION: &str = "{}";

/// Parses one transaction per line; `#` starts a comment line, blank lines
/// are skipped, and a line holding only `{}` is an empty transaction.
pub fn parse_transactions(text: &str) -> Result<TransactionalDataset> {
    let rows: Vec<Vec<&str>> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| if l == EMPTY_TRANSACTION { Vec::new() } else { l.split_whitespace().collect() })
        .collect();
    if rows.is_empty() {
        return Err(Error::EmptyDataset);
    }
    Ok(TransactionalDataset::from_named(&rows))
}

pub fn render_transactions(ds: &TransactionalDataset) -> String {
    let mut out = String::new();
    for t in ds.transactions() {
        if t.is_empty() {
            out.push_str(EMPTY_TRANSACTION);
        } else {
            out.push_str(&t.names(ds.items()).collect::<Vec<_>>().join(" "));
        }
        out.push('\n');
    }
    out
}

/// Closed sets with supports and their cover (Hasse) edges, in a
/// topological order: support descending, then size, then item order.
#[derive(Debug, Clone, PartialEq)]
pub struct ClosureLattice {
    items: Vec<String>,
    sets: Vec<ItemSet>,
    supports: Vec<u64>,
    covers: Vec<(usize, usize)>,
    upper: Vec<Vec<usize>>,
    lower: Vec<Vec<usize>>,
}

impl ClosureLattice {
    /// Assembles a lattice from closed sets and supports, deriving covers
    /// from strict inclusion. Supports must be positive and non-increasing
    /// along inclusion.
    pub fn new(items: Vec<String>, sets: Vec<ItemSet>, supports: Vec<u64>) -> Result<Self> {
        if sets.len() != supports.len() {
            return Err(Error::InvalidLattice(format!(
                "{} sets but {} supports",
                sets.len(),
                supports.len()
            )));
        }
        let mut seen = HashSet::new();
        for (s, &supp) in sets.iter().zip(&supports) {
            if supp == 0 {
                return Err(Error::InvalidLattice(format!(
                    "{} has zero support",
                    s.label(&items)
                )));
            }
            if s.items().iter().any(|&i| i >= items.len()) {
                return Err(Error::InvalidLattice("item index out of range".into()));
            }
            if !seen.insert(s.clone()) {
                return Err(Error::InvalidLattice(format!(
                    "{} listed twice",
                    s.label(&items)
                )));
            }
        }
        let mut order: Vec<usize> = (0..sets.len()).collect();
        order.sort_by(|&a, &b| {
            supports[b]
                .cmp(&supports[a])
                .then(sets[a].len().cmp(&sets[b].len()))
                .then(sets[a].cmp(&sets[b]))
        });
        let sets: Vec<ItemSet> = order.iter().map(|&i| sets[i].clone()).collect();
        let supports: Vec<u64> = order.iter().map(|&i| supports[i]).collect();

        let n = sets.len();
        let mut covers = Vec::new();
        let mut upper = vec![Vec::new(); n];
        let mut lower = vec![Vec::new(); n];
        for y in 0..n {
            let below: Vec<usize> = (0..n)
                .filter(|&x| sets[x].is_proper_subset(&sets[y]))
                .collect();
            for &x in &below {
                if supports[x] < supports[y] {
                    return Err(Error::InvalidLattice(format!(
                        "support grows from {} to {}",
                        sets[x].label(&items),
                        sets[y].label(&items)
                    )));
                }
            }
            for &x in &below {
                let covered = below
                    .iter()
                    .any(|&z| z != x && sets[x].is_proper_subset(&sets[z]));
                if !covered {
                    covers.push((x, y));
                }
            }
        }
        covers.sort_unstable();
        for &(x, y) in &covers {
            upper[x].push(y);
            lower[y].push(x);
        }
        Ok(ClosureLattice {
            items,
            sets,
            supports,
            covers,
            upper,
            lower,
        })
    }

    pub fn items(&self) -> &[String] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn sets(&self) -> &[ItemSet] {
        &self.sets
    }

    pub fn set(&self, i: usize) -> &ItemSet {
        &self.sets[i]
    }

    pub fn support(&self, i: usize) -> u64 {
        self.supports[i]
    }

    pub fn supports(&self) -> &[u64] {
        &self.supports
    }

    /// Cover edges `(lower, upper)`, lower being the subset.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.upper[i]
    }

    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.lower[i]
    }

    pub fn index_of(&self, set: &ItemSet) -> Option<usize> {
        self.sets.iter().position(|s| s == set)
    }

    pub fn label(&self, i: usize) -> String {
        self.sets[i].label(&self.items)
    }

    /// `s NAME SUPPORT` lines followed by `c LOWER UPPER` cover lines.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for i in 0..self.len() {
            let _ = writeln!(out, "s {} {}", self.label(i), self.supports[i]);
        }
        for &(x, y) in &self.covers {
            let _ = writeln!(out, "c {} {}", self.label(x), self.label(y));
        }
        out
    }
}

/// Every closed set with support at least `minsupp`.
pub fn mine_closures(ds: &TransactionalDataset, minsupp: u64) -> Result<ClosureLattice> {
    if ds.is_empty() {
        return Err(Error::EmptyDataset);
    }
    if minsupp == 0 {
        return Err(Error::InvalidParameter("minimum support must be at least 1".into()));
    }
    let mut family: HashSet<ItemSet> = HashSet::new();
    let distinct: HashSet<&ItemSet> = ds.transactions().iter().collect();
    for t in ds.transactions() {
        if !distinct.contains(t) || family.contains(t) {
            continue;
        }
        let fresh: Vec<ItemSet> = family.iter().map(|x| x.intersection(t)).collect();
        family.insert(t.clone());
        family.extend(fresh);
    }
    let mut sets = Vec::new();
    let mut supports = Vec::new();
    for s in family {
        let supp = ds.support(&s);
        if supp >= minsupp {
            sets.push(s);
            supports.push(supp);
        }
    }
    ClosureLattice::new(ds.items().to_vec(), sets, supports)
}

/// Confidence threshold held as an exact fraction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Confidence {
    num: BigUint,
    den: BigUint,
    text: String,
}

impl Confidence {
    pub fn value(&self) -> f64 {
        // both fit comfortably in f64 range for any sensible threshold
        let n: f64 = self.num.to_string().parse().unwrap_or(f64::INFINITY);
        let d: f64 = self.den.to_string().parse().unwrap_or(f64::INFINITY);
        n / d
    }

    /// `-ln(conf)`: the matching additive threshold on log-scaled weights.
    pub fn log_threshold(&self) -> f64 {
        if self.num == self.den {
            0.0
        } else {
            -self.value().ln()
        }
    }

    /// Whether `part / whole >= conf`, compared exactly.
    pub fn admits(&self, part: u64, whole: u64) -> bool {
        BigUint::from(part) * &self.den >= BigUint::from(whole) * &self.num
    }
}

impl fmt::Display for Confidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

fn parse_unsigned(digits: &str) -> Option<BigUint> {
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigUint::parse_bytes(digits.as_bytes(), 10)
}

impl FromStr for Confidence {
    type Err = Error;

    /// Accepts decimals (`0.6`, `6e-1`) and fractions (`2/3`).
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidConfidence(s.to_string());
        let text = s.trim();
        let (num, den) = if let Some((p, q)) = text.split_once('/') {
            (
                parse_unsigned(p.trim()).ok_or_else(bad)?,
                parse_unsigned(q.trim()).ok_or_else(bad)?,
            )
        } else {
            let (mantissa, exponent) = match text.split_once(['e', 'E']) {
                Some((m, e)) => (m, e.parse::<i32>().map_err(|_| bad())?),
                None => (text, 0),
            };
            let mantissa = mantissa.strip_prefix('+').unwrap_or(mantissa);
            let (int, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
            if int.is_empty() && frac.is_empty() {
                return Err(bad());
            }
            let digits = format!("{int}{frac}");
            let mut num = parse_unsigned(&digits).ok_or_else(bad)?;
            let mut den = BigUint::from(10u32).pow(frac.len() as u32);
            let scale = BigUint::from(10u32).pow(exponent.unsigned_abs());
            if exponent >= 0 {
                num *= scale;
            } else {
                den *= scale;
            }
            (num, den)
        };
        let zero = BigUint::from(0u32);
        if den == zero || num == zero || num > den {
            return Err(bad());
        }
        Ok(Confidence {
            num,
            den,
            text: text.to_string(),
        })
    }
}

impl TryFrom<f64> for Confidence {
    type Error = Error;

    /// Uses the shortest decimal that round-trips to `value`, so `0.6` means
    /// exactly three fifths.
    fn try_from(value: f64) -> Result<Self> {
        if !value.is_finite() {
            return Err(Error::InvalidConfidence(value.to_string()));
        }
        value.to_string().parse()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BasicAntecedentPair {
    pub antecedent: ItemSet,
    pub consequent: ItemSet,
    pub antecedent_support: u64,
    pub consequent_support: u64,
    pub confidence: f64,
}

/// Pairs `u <= v` of closed sets with `supp(v)/supp(u) >= conf` that fall
/// below `conf` when `v` moves up one cover or `u` moves down one cover.
pub fn basic_antecedents(lat: &ClosureLattice, conf: &Confidence) -> Vec<BasicAntecedentPair> {
    let mut out = Vec::new();
    for u in 0..lat.len() {
        let su = lat.support(u);
        for v in 0..lat.len() {
            if !lat.set(u).is_subset(lat.set(v)) {
                continue;
            }
            let sv = lat.support(v);
            if !conf.admits(sv, su) {
                continue;
            }
            let right_tight = lat.upper_covers(v).iter().all(|&w| !conf.admits(lat.support(w), su));
            let left_tight = lat.lower_covers(u).iter().all(|&w| !conf.admits(sv, lat.support(w)));
            if right_tight && left_tight {
                out.push(BasicAntecedentPair {
                    antecedent: lat.set(u).clone(),
                    consequent: lat.set(v).clone(),
                    antecedent_support: su,
                    consequent_support: sv,
                    confidence: sv as f64 / su as f64,
                });
            }
        }
    }
    out
}

/// `ANTECEDENT -> CONSEQUENT<TAB>confidence`, where the consequent lists the
/// items the rule adds to its antecedent. An empty side prints as `{}`.
pub fn render_antecedents(items: &[String], pairs: &[BasicAntecedentPair]) -> String {
    let side = |s: &ItemSet| {
        if s.is_empty() {
            "{}".to_string()
        } else {
            s.names(items).collect::<Vec<_>>().join(" ")
        }
    };
    let mut out = String::new();
    for p in pairs {
        let added = p.consequent.difference(&p.antecedent);
        let _ = writeln!(
            out,
            "{} -> {}\t{:.6}",
            side(&p.antecedent),
            side(&added),
            p.confidence
        );
    }
    out
}

/// What to do with a cover edge joining two closures of equal support.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EqualSupportPolicy {
    #[default]
    Reject,
    /// Merge the endpoints into one vertex named after the smaller set.
    Contract,
}

/// Log-scaled Hasse graph plus the mapping back to closed sets.
#[derive(Debug, Clone)]
pub struct LogScaledLattice {
    pub dag: VertexWeightedDag,
    /// Dag vertex of each closed set.
    pub vertex_of: Vec<VertexId>,
    /// Closed sets merged into each dag vertex, first one naming it.
    pub members: Vec<Vec<usize>>,
}

/// Vertex per closed set with weight `ln(max_support / support)`; edges are
/// the covers, subset to superset.
pub fn to_log_weighted_dag(
    lat: &ClosureLattice,
    policy: EqualSupportPolicy,
) -> Result<LogScaledLattice> {
    if lat.is_empty() {
        return Err(Error::EmptyLattice);
    }
    let n = lat.len();
    let mut class: Vec<usize> = (0..n).collect();
    fn find(class: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while class[r] != r {
            r = class[r];
        }
        class[x] = r;
        r
    }
    for &(x, y) in lat.covers() {
        if lat.support(x) == lat.support(y) {
            match policy {
                EqualSupportPolicy::Reject => {
                    return Err(Error::EqualSupportCover {
                        lower: lat.label(x),
                        upper: lat.label(y),
                        support: lat.support(x),
                    })
                }
                EqualSupportPolicy::Contract => {
                    let (a, b) = (find(&mut class, x), find(&mut class, y));
                    // lattice order is topological, so the smaller index stays
                    let (keep, drop) = (a.min(b), a.max(b));
                    class[drop] = keep;
                }
            }
        }
    }
    let max_support = lat.supports().iter().copied().max().expect("nonempty");
    let mut vertex_of = vec![0; n];
    let mut members: Vec<Vec<usize>> = Vec::new();
    let mut rep_vertex: HashMap<usize, VertexId> = HashMap::new();
    for (i, slot) in vertex_of.iter_mut().enumerate() {
        let rep = find(&mut class, i);
        let v = *rep_vertex.entry(rep).or_insert_with(|| {
            members.push(Vec::new());
            members.len() - 1
        });
        *slot = v;
        members[v].push(i);
    }
    let names = members.iter().map(|m| lat.label(m[0])).collect();
    let weights = members
        .iter()
        .map(|m| {
            let s = lat.support(m[0]);
            if s == max_support {
                0.0
            } else {
                (max_support as f64 / s as f64).ln()
            }
        })
        .collect();
    let mut seen = HashSet::new();
    let edges = lat
        .covers()
        .iter()
        .map(|&(x, y)| (vertex_of[x], vertex_of[y]))
        .filter(|&(a, b)| a != b && seen.insert((a, b)))
        .collect();
    let dag = VertexWeightedDag::new(names, weights, edges)?;
    Ok(LogScaledLattice {
        dag,
        vertex_of,
        members,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Budget;
    use crate::tightpair::{all_tight_pairs, PairAlgorithm};

    fn abc() -> TransactionalDataset {
        parse_transactions("a b\na b\na c\n").unwrap()
    }

    fn set(ds_items: &[String], names: &[&str]) -> ItemSet {
        ItemSet::new(
            names
                .iter()
                .map(|n| ds_items.iter().position(|i| i == n).unwrap())
                .collect(),
        )
    }

    // closure of every subset of items, deduplicated
    fn brute_force_closed_sets(ds: &TransactionalDataset) -> HashMap<ItemSet, u64> {
        let m = ds.items().len();
        let mut out = HashMap::new();
        for mask in 0u32..(1 << m) {
            let s = ItemSet::new((0..m).filter(|i| mask >> i & 1 == 1).collect());
            if let Some(c) = ds.closure(&s) {
                let supp = ds.support(&c);
                out.insert(c, supp);
            }
        }
        out
    }

    #[test]
    fn parse_and_render() {
        let ds = abc();
        assert_eq!(ds.items(), ["a", "b", "c"]);
        assert_eq!(ds.len(), 3);
        assert_eq!(parse_transactions(&render_transactions(&ds)).unwrap(), ds);
        let one = parse_transactions("# header\n\nx\n").unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(parse_transactions("# nothing\n\n"), Err(Error::EmptyDataset));
    }

    #[test]
    fn mines_three_closures() {
        let ds = abc();
        let lat = mine_closures(&ds, 1).unwrap();
        let it = ds.items();
        assert_eq!(
            lat.sets(),
            [set(it, &["a"]), set(it, &["a", "b"]), set(it, &["a", "c"])]
        );
        assert_eq!(lat.supports(), [3, 2, 1]);
        assert_eq!(lat.covers(), [(0, 1), (0, 2)]);
        let brute = brute_force_closed_sets(&ds);
        assert_eq!(brute.len(), 3);
        for (i, s) in lat.sets().iter().enumerate() {
            assert_eq!(brute[s], lat.support(i));
        }
    }

    #[test]
    fn single_transaction() {
        let ds = parse_transactions("x").unwrap();
        let lat = mine_closures(&ds, 1).unwrap();
        assert_eq!(lat.len(), 1);
        assert_eq!(lat.support(0), 1);
        assert!(lat.covers().is_empty());
        let log = to_log_weighted_dag(&lat, EqualSupportPolicy::Reject).unwrap();
        assert_eq!(log.dag.weights(), [0.0]);
        assert_eq!(log.dag.edge_count(), 0);
    }

    #[test]
    fn minsupp_above_count_gives_empty_lattice() {
        let lat = mine_closures(&abc(), 4).unwrap();
        assert!(lat.is_empty());
        assert!(matches!(
            to_log_weighted_dag(&lat, EqualSupportPolicy::Reject),
            Err(Error::EmptyLattice)
        ));
        assert_eq!(mine_closures(&abc(), 3).unwrap().len(), 1);
        assert!(mine_closures(&abc(), 0).is_err());
    }

    #[test]
    fn log_weights() {
        let lat = mine_closures(&abc(), 1).unwrap();
        let log = to_log_weighted_dag(&lat, EqualSupportPolicy::Reject).unwrap();
        let w = log.dag.weights();
        assert_eq!(w[0], 0.0);
        assert!((w[1] - 0.405465).abs() < 1e-6);
        assert!((w[2] - 1.098612).abs() < 1e-6);
        assert_eq!(log.dag.names(), ["{a}", "{a,b}", "{a,c}"]);
        for &(x, y) in lat.covers() {
            let conf = lat.support(y) as f64 / lat.support(x) as f64;
            let diff = log.dag.weight(log.vertex_of[y]) - log.dag.weight(log.vertex_of[x]);
            assert!((diff + conf.ln()).abs() < 1e-12);
        }
    }

    #[test]
    fn equal_support_cover_rejected_or_contracted() {
        let items: Vec<String> = ["p", "q"].iter().map(|s| s.to_string()).collect();
        let lat = ClosureLattice::new(
            items,
            vec![ItemSet::new(vec![0]), ItemSet::new(vec![0, 1])],
            vec![4, 4],
        )
        .unwrap();
        assert!(matches!(
            to_log_weighted_dag(&lat, EqualSupportPolicy::Reject),
            Err(Error::EqualSupportCover { support: 4, .. })
        ));
        let merged = to_log_weighted_dag(&lat, EqualSupportPolicy::Contract).unwrap();
        assert_eq!(merged.dag.vertex_count(), 1);
        assert_eq!(merged.members, vec![vec![0, 1]]);
        assert_eq!(merged.dag.names(), ["{p}"]);
    }

    #[test]
    fn confidence_parsing_is_exact() {
        let c: Confidence = "0.6".parse().unwrap();
        assert!(c.admits(3, 5));
        assert!(!c.admits(29, 49));
        let third: Confidence = "2/3".parse().unwrap();
        assert!(third.admits(2, 3));
        assert!(!third.admits(66, 100));
        assert!("6e-1".parse::<Confidence>().unwrap().admits(3, 5));
        for bad in ["0", "1.5", "-0.2", "x", "", "3/2", "1/0"] {
            assert!(bad.parse::<Confidence>().is_err(), "{bad}");
        }
        assert_eq!(Confidence::try_from(1.0).unwrap().log_threshold(), 0.0);
        assert!(Confidence::try_from(f64::NAN).is_err());
    }

    #[test]
    fn antecedents_at_point_six() {
        let ds = abc();
        let lat = mine_closures(&ds, 1).unwrap();
        let got = basic_antecedents(&lat, &"0.6".parse().unwrap());
        let it = ds.items();
        assert!(got
            .iter()
            .any(|p| p.antecedent == set(it, &["a"]) && p.consequent == set(it, &["a", "b"])));
        // cross-check against tight pairs of the log-scaled dag
        let log = to_log_weighted_dag(&lat, EqualSupportPolicy::Reject).unwrap();
        let budget = Budget::new(-(0.6f64.ln())).unwrap().with_tolerance(1e-9).unwrap();
        let pairs = all_tight_pairs(&log.dag, budget, PairAlgorithm::Weights);
        assert_eq!(pairs.len(), got.len());
    }

    #[test]
    fn antecedent_boundary_probe() {
        let lat = mine_closures(&abc(), 1).unwrap();
        let has_ab = |conf: &str| {
            basic_antecedents(&lat, &conf.parse().unwrap())
                .iter()
                .any(|p| p.antecedent.len() == 1 && p.consequent.len() == 2 && p.consequent_support == 2)
        };
        assert!(has_ab("2/3"));
        assert!(!has_ab("0.6667"));
    }

    #[test]
    fn confidence_one_keeps_only_reflexive_pairs() {
        let lat = mine_closures(&abc(), 1).unwrap();
        let got = basic_antecedents(&lat, &"1".parse().unwrap());
        assert_eq!(got.len(), lat.len());
        assert!(got.iter().all(|p| p.antecedent == p.consequent));
    }

    #[test]
    fn render_lists_added_items() {
        let ds = abc();
        let lat = mine_closures(&ds, 1).unwrap();
        let got = basic_antecedents(&lat, &"0.6".parse().unwrap());
        let text = render_antecedents(ds.items(), &got);
        assert!(text.lines().any(|l| l == "a -> b\t0.666667"), "{text}");
        assert!(text.lines().any(|l| l == "a c -> {}\t1.000000"), "{text}");
    }
}
