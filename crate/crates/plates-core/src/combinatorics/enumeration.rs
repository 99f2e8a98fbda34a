use crate::combinatorics::composite::CompositeSetPartition;
use crate::combinatorics::labels::LabelSet;
use crate::combinatorics::osp::OrderedSetPartition;
use crate::error::{Error, Result};

/// Default ceiling for enumeration-driven operations. Ordered set partitions
/// grow like the ordered Bell numbers (545 835 at n = 8), so anything larger
/// must be requested explicitly (`PLATES_MAX_N` / `--force` in the CLI, or the
/// `_with_cap` variants here).
pub const DEFAULT_MAX_N: u32 = 8;

fn check_cap(n: u32, cap: u32, what: &str) -> Result<()> {
    if n > cap {
        return Err(Error::Resource(format!(
            "{what} for n = {n} exceeds the size cap {cap}; raise the cap to proceed"
        )));
    }
    if n > LabelSet::MAX_LABEL {
        return Err(Error::Resource(format!(
            "{what} for n = {n} exceeds the representable label range (max {})",
            LabelSet::MAX_LABEL
        )));
    }
    Ok(())
}

/// A relative-position requirement between two atoms (indices into an atom
/// list): atom `a`'s block must come strictly/weakly before atom `b`'s.
#[derive(Clone, Copy, Debug)]
pub(crate) struct AtomConstraint {
    pub a: usize,
    pub b: usize,
    pub strict: bool,
}

/// All ordered set partitions of `m` atoms, each part encoded as a bitmask of
/// atom indices. Built by inserting atoms one at a time into every existing
/// part and every gap, which visits each partition exactly once.
fn atom_orderings(m: usize) -> Vec<Vec<u32>> {
    assert!(m <= 20, "atom enumeration blow-up");
    let mut level: Vec<Vec<u32>> = vec![Vec::new()];
    for atom in 0..m {
        let bit = 1u32 << atom;
        let mut next = Vec::with_capacity(level.len() * (atom + 2));
        for partition in &level {
            for i in 0..partition.len() {
                let mut q = partition.clone();
                q[i] |= bit;
                next.push(q);
            }
            for i in 0..=partition.len() {
                let mut q = Vec::with_capacity(partition.len() + 1);
                q.extend_from_slice(&partition[..i]);
                q.push(bit);
                q.extend_from_slice(&partition[i..]);
                next.push(q);
            }
        }
        level = next;
    }
    level
}

/// Signed sum over all ways to interleave-and-merge the given disjoint atoms
/// subject to relative-position constraints. Each surviving arrangement `π`
/// (blocks are unions of atoms) carries the sign `(-1)^(m - len(π))` with `m`
/// the number of atoms. This single enumeration realizes shuffle-lumpings,
/// tree expansions, and the block-level expansions used by straightening.
pub(crate) fn constrained_signed_osps(
    atoms: &[LabelSet],
    constraints: &[AtomConstraint],
) -> Vec<(OrderedSetPartition, i8)> {
    let m = atoms.len();
    let mut out = Vec::new();
    let mut positions = vec![0usize; m];
    'candidates: for candidate in atom_orderings(m) {
        for (part_index, part) in candidate.iter().enumerate() {
            let mut bits = *part;
            while bits != 0 {
                positions[bits.trailing_zeros() as usize] = part_index;
                bits &= bits - 1;
            }
        }
        for c in constraints {
            let ok = if c.strict {
                positions[c.a] < positions[c.b]
            } else {
                positions[c.a] <= positions[c.b]
            };
            if !ok {
                continue 'candidates;
            }
        }
        let blocks: Vec<LabelSet> = candidate
            .iter()
            .map(|part| {
                let mut block = LabelSet::empty();
                let mut bits = *part;
                while bits != 0 {
                    let atom = bits.trailing_zeros() as usize;
                    block = block.union(atoms[atom]);
                    bits &= bits - 1;
                }
                block
            })
            .collect();
        let sign = if (m - candidate.len()) % 2 == 0 { 1 } else { -1 };
        out.push((
            OrderedSetPartition::new(blocks).expect("atoms are disjoint and nonempty"),
            sign,
        ));
    }
    out.sort_by_key(|(osp, _)| osp.order_key());
    out
}

/// The signed shuffle-lumpings of a composite: all arrangements of its blocks
/// where blocks of distinct factors may interleave or merge while each
/// factor's own blocks stay strictly ordered and unmerged. The sign of an
/// arrangement `π` is `(-1)^(m - len(π))` with `m` the total block count.
pub fn shuffle_lumpings(csp: &CompositeSetPartition) -> Vec<(OrderedSetPartition, i8)> {
    let mut atoms = Vec::with_capacity(csp.total_blocks());
    let mut constraints = Vec::new();
    for factor in csp.factors() {
        let base = atoms.len();
        for (i, block) in factor.blocks().iter().enumerate() {
            atoms.push(*block);
            if i > 0 {
                constraints.push(AtomConstraint { a: base + i - 1, b: base + i, strict: true });
            }
        }
    }
    constrained_signed_osps(&atoms, &constraints)
}

/// All ordered set partitions of `{1, …, n}` in lexicographic (packed word)
/// order.
pub fn enumerate_osps(n: u32) -> Result<Vec<OrderedSetPartition>> {
    enumerate_osps_with_cap(n, DEFAULT_MAX_N)
}

pub fn enumerate_osps_with_cap(n: u32, cap: u32) -> Result<Vec<OrderedSetPartition>> {
    check_cap(n, cap, "enumerating ordered set partitions")?;
    if n == 0 {
        return Err(Error::domain("n must be positive"));
    }
    let atoms: Vec<LabelSet> = (1..=n).map(LabelSet::singleton).collect();
    let mut all: Vec<OrderedSetPartition> = atom_orderings(n as usize)
        .into_iter()
        .map(|candidate| {
            let blocks = candidate
                .iter()
                .map(|part| {
                    let mut block = LabelSet::empty();
                    let mut bits = *part;
                    while bits != 0 {
                        block = block.union(atoms[bits.trailing_zeros() as usize]);
                        bits &= bits - 1;
                    }
                    block
                })
                .collect();
            OrderedSetPartition::new(blocks).expect("valid partition")
        })
        .collect();
    all.sort_by_key(|osp| osp.order_key());
    Ok(all)
}

/// Unordered set partitions of a label set, blocks sorted by minimum.
fn set_partitions(ground: LabelSet) -> Vec<Vec<LabelSet>> {
    if ground.is_empty() {
        return vec![Vec::new()];
    }
    let min = ground.min_label().unwrap();
    let rest = ground.difference(LabelSet::singleton(min));
    let rest_bits = rest.bits();
    let mut out = Vec::new();
    // Iterate over all subsets of `rest` joining the minimum's block.
    let mut subset = rest_bits;
    loop {
        let block = LabelSet::from_bits(subset).union(LabelSet::singleton(min));
        for mut partition in set_partitions(LabelSet::from_bits(rest_bits & !subset)) {
            let mut with_block = vec![block];
            with_block.append(&mut partition);
            out.push(with_block);
        }
        if subset == 0 {
            break;
        }
        subset = (subset - 1) & rest_bits;
    }
    out
}

/// Unordered partitions of the index set `{0, …, count-1}`, each group sorted
/// ascending and groups sorted by their minima.
fn index_groupings(count: usize) -> Vec<Vec<Vec<usize>>> {
    if count == 0 {
        return vec![Vec::new()];
    }
    let mut out = vec![vec![vec![0]]];
    for item in 1..count {
        let mut next = Vec::new();
        for grouping in &out {
            for g in 0..grouping.len() {
                let mut q = grouping.clone();
                q[g].push(item);
                next.push(q);
            }
            let mut q = grouping.clone();
            q.push(vec![item]);
            next.push(q);
        }
        out = next;
    }
    out
}

fn permutations_rec<T: Clone>(items: &[T], prefix: &mut Vec<T>, used: &mut Vec<bool>, out: &mut Vec<Vec<T>>) {
    if prefix.len() == items.len() {
        out.push(prefix.clone());
        return;
    }
    for i in 0..items.len() {
        if !used[i] {
            used[i] = true;
            prefix.push(items[i].clone());
            permutations_rec(items, prefix, used, out);
            prefix.pop();
            used[i] = false;
        }
    }
}

/// All permutations of a slice, in lexicographic order of index sequences.
pub fn permutations<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    let mut out = Vec::new();
    permutations_rec(items, &mut Vec::new(), &mut vec![false; items.len()], &mut out);
    out
}

fn csps_from_blocks(blocks: &[LabelSet], factor_count: Option<usize>) -> Vec<CompositeSetPartition> {
    let mut out = Vec::new();
    for grouping in index_groupings(blocks.len()) {
        if let Some(k) = factor_count {
            if grouping.len() != k {
                continue;
            }
        }
        // Per group: orderings of its blocks with the min-bearing block first
        // (blocks are sorted by min, so that is the lowest index).
        let per_group: Vec<Vec<OrderedSetPartition>> = grouping
            .iter()
            .map(|group| {
                let tail: Vec<usize> = group[1..].to_vec();
                permutations(&tail)
                    .into_iter()
                    .map(|ordering| {
                        let mut factor_blocks = vec![blocks[group[0]]];
                        factor_blocks.extend(ordering.iter().map(|&i| blocks[i]));
                        OrderedSetPartition::new(factor_blocks).expect("valid factor")
                    })
                    .collect()
            })
            .collect();
        // Cartesian product of the per-group choices.
        let mut partial: Vec<Vec<OrderedSetPartition>> = vec![Vec::new()];
        for choices in &per_group {
            let mut next = Vec::with_capacity(partial.len() * choices.len());
            for p in &partial {
                for c in choices {
                    let mut q = p.clone();
                    q.push(c.clone());
                    next.push(q);
                }
            }
            partial = next;
        }
        for factors in partial {
            out.push(CompositeSetPartition::new(factors).expect("disjoint supports"));
        }
    }
    out
}

/// All standard composite set partitions of `{1, …, n}`, optionally filtered
/// to exactly `factor_count` factors. Ordered by the lexicographic position of
/// their standard composition, which matches the change-of-basis column order.
pub fn enumerate_standard_csps(
    n: u32,
    factor_count: Option<usize>,
) -> Result<Vec<CompositeSetPartition>> {
    enumerate_standard_csps_with_cap(n, factor_count, DEFAULT_MAX_N)
}

pub fn enumerate_standard_csps_with_cap(
    n: u32,
    factor_count: Option<usize>,
    cap: u32,
) -> Result<Vec<CompositeSetPartition>> {
    check_cap(n, cap, "enumerating standard composites")?;
    if n == 0 {
        return Err(Error::domain("n must be positive"));
    }
    let mut out = Vec::new();
    for blocks in set_partitions(LabelSet::full(n)) {
        out.extend(csps_from_blocks(&blocks, factor_count));
    }
    out.sort_by_key(|csp| csp.order_key());
    Ok(out)
}

/// The standard composites of `{1, …, n}` all of whose blocks are singletons;
/// there are n! of them (they encode permutations by their factor cycles).
pub fn standard_singleton_csps(n: u32) -> Result<Vec<CompositeSetPartition>> {
    if n == 0 || n > LabelSet::MAX_LABEL {
        return Err(Error::domain("n must be in 1..=32"));
    }
    let blocks: Vec<LabelSet> = (1..=n).map(LabelSet::singleton).collect();
    let mut out = csps_from_blocks(&blocks, None);
    out.sort_by_key(|csp| csp.order_key());
    Ok(out)
}
