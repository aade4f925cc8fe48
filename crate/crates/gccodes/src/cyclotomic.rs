//! Orbit machinery on Z/nZ under G = `<q>` and H = `<q^r>`.
//!
//! The H-orbits are the q^r-cyclotomic cosets. A *block* is a union of
//! H-orbits, no two of which lie in the same G-orbit, such that
//! r | ord(q mod n/gcd(n,k)) for every member k. Blocks parametrize the
//! cyclic codes over GF(q^r) whose generator is coprime to all of its
//! Galois conjugates.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{gcd_u64, prime_power};

/// Multiplicative order of q modulo m (m >= 1, gcd(q, m) = 1). ord(q mod 1) = 1.
pub fn ord_mod(q: u64, m: usize) -> usize {
    if m == 1 {
        return 1;
    }
    let m64 = m as u64;
    assert_eq!(gcd_u64(q, m64), 1, "ord({q} mod {m}) needs gcd 1");
    let base = (q % m64) as u128;
    let mut acc = base;
    let mut ord = 1;
    while acc != 1 {
        acc = acc * base % m64 as u128;
        ord += 1;
    }
    ord
}

/// Nonzero quadratic residues modulo n, ascending.
pub fn quadratic_residues(n: usize) -> Vec<usize> {
    let set: BTreeSet<usize> = (1..n).map(|k| k * k % n).filter(|&k| k != 0).collect();
    set.into_iter().collect()
}

/// Orbit partitions of Z/nZ under G = `<q>` and H = `<q^r>`, with the
/// per-element data m_k = n/gcd(n,k) and s_k = ord(q mod m_k).
#[derive(Debug)]
pub struct OrbitTable {
    n: usize,
    q: u64,
    r: usize,
    s: usize,
    h_orbits: Vec<Vec<usize>>,
    g_orbits: Vec<Vec<usize>>,
    h_orbit_of: Vec<usize>,
    g_orbit_of: Vec<usize>,
    h_to_g: Vec<usize>,
    s_k: Vec<usize>,
}

fn orbits_under(n: usize, mult: usize) -> (Vec<Vec<usize>>, Vec<usize>) {
    let mut orbit_of = vec![usize::MAX; n];
    let mut orbits = Vec::new();
    for start in 0..n {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let idx = orbits.len();
        let mut orbit = Vec::new();
        let mut k = start;
        loop {
            orbit_of[k] = idx;
            orbit.push(k);
            k = k * mult % n;
            if k == start {
                break;
            }
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    (orbits, orbit_of)
}

impl OrbitTable {
    pub fn new(n: usize, q: u64, r: usize) -> Result<Arc<OrbitTable>> {
        if n < 2 {
            return Err(Error::ZeroLength);
        }
        prime_power(q).ok_or(Error::NotPrimePower(q))?;
        if gcd_u64(n as u64, q) != 1 {
            return Err(Error::NotCoprime { n, q });
        }
        if r < 2 {
            return Err(Error::ExtensionTooSmall);
        }
        let s = ord_mod(q, n);
        let qm = (q % n as u64) as usize;
        let qrm = {
            let mut acc = 1usize;
            for _ in 0..r {
                acc = acc * qm % n;
            }
            acc
        };
        let (h_orbits, h_orbit_of) = orbits_under(n, qrm);
        let (g_orbits, g_orbit_of) = orbits_under(n, qm);
        let h_to_g = h_orbits.iter().map(|o| g_orbit_of[o[0]]).collect();
        let s_k = (0..n)
            .map(|k| ord_mod(q, n / gcd_u64(n as u64, k as u64) as usize))
            .collect();
        Ok(Arc::new(OrbitTable {
            n,
            q,
            r,
            s,
            h_orbits,
            g_orbits,
            h_orbit_of,
            g_orbit_of,
            h_to_g,
            s_k,
        }))
    }

    pub fn n(&self) -> usize {
        self.n
    }
    pub fn q(&self) -> u64 {
        self.q
    }
    pub fn r(&self) -> usize {
        self.r
    }

    /// ord(q mod n).
    pub fn s(&self) -> usize {
        self.s
    }

    /// H-orbits, sorted by least element.
    pub fn h_orbits(&self) -> &[Vec<usize>] {
        &self.h_orbits
    }

    /// G-orbits (the q-cyclotomic cosets), sorted by least element.
    pub fn g_orbits(&self) -> &[Vec<usize>] {
        &self.g_orbits
    }

    pub fn h_orbit_of(&self, k: usize) -> &[usize] {
        &self.h_orbits[self.h_orbit_of[k % self.n]]
    }

    pub fn g_orbit_of(&self, k: usize) -> &[usize] {
        &self.g_orbits[self.g_orbit_of[k % self.n]]
    }

    pub fn g_orbit_index_of_h_orbit(&self, h_idx: usize) -> usize {
        self.h_to_g[h_idx]
    }

    pub fn m_k(&self, k: usize) -> usize {
        self.n / gcd_u64(self.n as u64, (k % self.n) as u64) as usize
    }

    /// ord(q mod m_k); always divides s, and s_0 = 1.
    pub fn s_k(&self, k: usize) -> usize {
        self.s_k[k % self.n]
    }

    /// Codes with Galois coprime generators of length n over GF(q^r) exist
    /// iff r | ord(q mod n).
    pub fn galois_supplemented_exists(&self) -> bool {
        self.s % self.r == 0
    }
}

/// Standalone existence criterion: r | ord(q mod n). Accepts r = 1.
pub fn galois_supplemented_exists(n: usize, q: u64, r: usize) -> Result<bool> {
    if n < 2 {
        return Err(Error::ZeroLength);
    }
    if gcd_u64(n as u64, q) != 1 {
        return Err(Error::NotCoprime { n, q });
    }
    if r == 0 {
        return Err(Error::ExtensionTooSmall);
    }
    Ok(ord_mod(q, n) % r == 0)
}

/// First violated block condition, in the order the conditions are stated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BlockViolation {
    NotUnionOfHOrbits {
        element: usize,
    },
    SharedGOrbit {
        first: usize,
        second: usize,
    },
    OrderCondition {
        element: usize,
        s_k: usize,
        r: usize,
    },
}

impl fmt::Display for BlockViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlockViolation::NotUnionOfHOrbits { element } => {
                write!(f, "not a union of H-orbits (orbit of {element} is cut)")
            }
            BlockViolation::SharedGOrbit { first, second } => write!(
                f,
                "two H-orbits in one G-orbit (representatives {first} and {second})"
            ),
            BlockViolation::OrderCondition { element, s_k, r } => {
                write!(f, "r = {r} does not divide ord(q mod m_{element}) = {s_k}")
            }
        }
    }
}

/// Checks the three block conditions, reporting the first violation.
pub fn validate_block(
    table: &OrbitTable,
    elements: &BTreeSet<usize>,
) -> std::result::Result<(), BlockViolation> {
    // union of H-orbits
    for &k in elements {
        for &j in table.h_orbit_of(k) {
            if !elements.contains(&j) {
                return Err(BlockViolation::NotUnionOfHOrbits { element: k });
            }
        }
    }
    // no two H-orbits in one G-orbit
    let h_indices: BTreeSet<usize> = elements.iter().map(|&k| table.h_orbit_of[k]).collect();
    let mut seen_g: Vec<Option<usize>> = vec![None; table.g_orbits.len()];
    for &h in &h_indices {
        let g = table.h_to_g[h];
        if let Some(prev) = seen_g[g] {
            return Err(BlockViolation::SharedGOrbit {
                first: table.h_orbits[prev][0],
                second: table.h_orbits[h][0],
            });
        }
        seen_g[g] = Some(h);
    }
    // r | s_k for every member
    for &k in elements {
        let s_k = table.s_k(k);
        if s_k % table.r != 0 {
            return Err(BlockViolation::OrderCondition {
                element: k,
                s_k,
                r: table.r,
            });
        }
    }
    Ok(())
}

/// A validated block: elements sorted, equality is set equality.
#[derive(Clone)]
pub struct Block {
    elements: Vec<usize>,
    table: Arc<OrbitTable>,
}

impl fmt::Debug for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Block{:?}", self.elements)
    }
}

impl PartialEq for Block {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
            && self.table.n == other.table.n
            && self.table.q == other.table.q
            && self.table.r == other.table.r
    }
}
impl Eq for Block {}

impl Block {
    pub fn new(table: Arc<OrbitTable>, elements: impl IntoIterator<Item = usize>) -> Result<Block> {
        let set: BTreeSet<usize> = elements.into_iter().map(|k| k % table.n).collect();
        validate_block(&table, &set).map_err(Error::InvalidBlock)?;
        Ok(Block {
            elements: set.into_iter().collect(),
            table,
        })
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn table(&self) -> &Arc<OrbitTable> {
        &self.table
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element_set(&self) -> BTreeSet<usize> {
        self.elements.iter().copied().collect()
    }

    /// c * B mod n for a (possibly negative) scalar c.
    pub fn scaled(&self, c: i64) -> BTreeSet<usize> {
        let n = self.table.n as i64;
        self.elements
            .iter()
            .map(|&k| (((k as i64 * c) % n + n) % n) as usize)
            .collect()
    }

    /// The r translates q^k B are pairwise disjoint and cover Z/nZ \ {0}.
    pub fn is_complete(&self) -> bool {
        let n = self.table.n;
        let q = (self.table.q % n as u64) as usize;
        let mut seen = vec![false; n];
        let mut count = 0usize;
        let mut factor = 1usize;
        for _ in 0..self.table.r {
            for &k in &self.elements {
                let j = k * factor % n;
                if j == 0 || seen[j] {
                    return false;
                }
                seen[j] = true;
                count += 1;
            }
            factor = factor * q % n;
        }
        count == n - 1
    }

    /// -B = B: the corresponding code is reversible.
    pub fn is_reversible(&self) -> bool {
        self.scaled(-1) == self.element_set()
    }

    /// B = -2B: the extended code is self-dual. Requires q a power of 2 and
    /// B complete.
    pub fn is_selfdual(&self) -> Result<bool> {
        if self.table.q & (self.table.q - 1) != 0 {
            return Err(Error::NotCharTwo);
        }
        if !self.is_complete() {
            return Err(Error::NotComplete);
        }
        Ok(self.scaled(-2) == self.element_set())
    }
}

/// Filters for [`enumerate_blocks`]. `None` leaves a property unconstrained.
#[derive(Debug, Clone)]
pub struct BlockFilters {
    pub complete: Option<bool>,
    pub reversible: Option<bool>,
    pub selfdual: Option<bool>,
    pub size: Option<usize>,
    /// Enumeration is refused above this length.
    pub n_cap: usize,
}

impl Default for BlockFilters {
    fn default() -> Self {
        BlockFilters {
            complete: None,
            reversible: None,
            selfdual: None,
            size: None,
            n_cap: 255,
        }
    }
}

/// All nonempty valid blocks matching the filters, sorted by element list.
///
/// The search walks the product space "at most one eligible H-orbit per
/// G-orbit"; the empty block is excluded.
pub fn enumerate_blocks(table: &Arc<OrbitTable>, filters: &BlockFilters) -> Result<Vec<Block>> {
    if table.n > filters.n_cap {
        return Err(Error::EnumerationCapped {
            n: table.n,
            cap: filters.n_cap,
        });
    }
    // eligible H-orbits per G-orbit (the s_k condition is constant on G-orbits)
    let mut per_g: Vec<Vec<usize>> = vec![Vec::new(); table.g_orbits.len()];
    for (h_idx, orbit) in table.h_orbits.iter().enumerate() {
        if orbit.iter().all(|&k| table.s_k(k) % table.r == 0) {
            per_g[table.h_to_g[h_idx]].push(h_idx);
        }
    }
    per_g.retain(|v| !v.is_empty());

    let mut out = Vec::new();
    let mut choice = vec![0usize; per_g.len()]; // 0 = skip, i = per_g[g][i-1]
    loop {
        let mut elements: BTreeSet<usize> = BTreeSet::new();
        for (g, &c) in choice.iter().enumerate() {
            if c > 0 {
                elements.extend(table.h_orbits[per_g[g][c - 1]].iter().copied());
            }
        }
        if !elements.is_empty() {
            let block = Block {
                elements: elements.into_iter().collect(),
                table: Arc::clone(table),
            };
            debug_assert!(validate_block(table, &block.element_set()).is_ok());
            if matches(&block, filters)? {
                out.push(block);
            }
        }
        // odometer over choices
        let mut i = 0;
        loop {
            if i == choice.len() {
                out.sort_by(|a, b| a.elements.cmp(&b.elements));
                return Ok(out);
            }
            choice[i] += 1;
            if choice[i] > per_g[i].len() {
                choice[i] = 0;
                i += 1;
            } else {
                break;
            }
        }
    }
}

fn matches(block: &Block, filters: &BlockFilters) -> Result<bool> {
    if let Some(size) = filters.size {
        if block.len() != size {
            return Ok(false);
        }
    }
    if let Some(want) = filters.complete {
        if block.is_complete() != want {
            return Ok(false);
        }
    }
    if let Some(want) = filters.reversible {
        if block.is_reversible() != want {
            return Ok(false);
        }
    }
    if let Some(want) = filters.selfdual {
        let sd = block.is_selfdual().unwrap_or(false);
        if sd != want {
            return Ok(false);
        }
    }
    Ok(true)
}
