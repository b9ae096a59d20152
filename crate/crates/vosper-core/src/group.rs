//! Finite groups as explicit multiplication tables, with the subset algebra
//! (Minkowski products, stabilizers, subgroups, coprogressions) used by the
//! Cayley-digraph classifiers.
//!
//! Elements are dense indices `0..n`. Every constructor validates the full
//! set of group axioms, so a `FiniteGroup` value is a group by construction.

use crate::bitset::{BitSet, GroupSubset};
use serde::Serialize;
use thiserror::Error;

/// Highest order covered by [`small_group_catalog`].
pub const CATALOG_MAX_ORDER: usize = 12;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("group order must be at least 1")]
    EmptyGroup,
    #[error("catalog covers orders 1 through {cap}, requested {requested}")]
    CatalogCapExceeded { requested: usize, cap: usize },
    #[error("multiplication table has wrong size or an entry out of range")]
    MalformedTable,
    #[error("row or column {0} of the multiplication table is not a permutation")]
    NotLatinSquare(usize),
    #[error("multiplication table has no two-sided identity")]
    NoIdentity,
    #[error("associativity fails on the triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("element {0} has no two-sided inverse")]
    NoInverse(usize),
    #[error("the identity element must be a member of the set")]
    IdentityNotInSet,
    #[error("the complement of the set is empty")]
    EmptyComplement,
    #[error("cannot parse group spec {0:?} (expected Z<n>, D<m>, Q8, A4, Dic3 joined by 'x')")]
    BadGroupSpec(String),
    #[error("cannot parse subset spec {0:?} (expected comma-separated element indices)")]
    BadSubsetSpec(String),
    #[error("subset element {index} out of range for a group of order {order}")]
    SubsetOutOfRange { index: usize, order: usize },
}

/// A finite group given by its full multiplication table.
#[derive(Clone)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<usize>,
    identity: usize,
    inv: Vec<usize>,
    label: String,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.label, self.order)
    }
}

impl FiniteGroup {
    /// Validates a raw table (row-major, `table[x*n + y] = x*y`) and wraps it.
    pub fn from_table(
        label: impl Into<String>,
        order: usize,
        table: Vec<usize>,
    ) -> Result<Self, GroupError> {
        if order == 0 {
            return Err(GroupError::EmptyGroup);
        }
        if table.len() != order * order || table.iter().any(|&e| e >= order) {
            return Err(GroupError::MalformedTable);
        }
        let mul = |x: usize, y: usize| table[x * order + y];

        // Latin square: every row and column is a permutation.
        for i in 0..order {
            let mut row_seen = vec![false; order];
            let mut col_seen = vec![false; order];
            for j in 0..order {
                if std::mem::replace(&mut row_seen[mul(i, j)], true)
                    || std::mem::replace(&mut col_seen[mul(j, i)], true)
                {
                    return Err(GroupError::NotLatinSquare(i));
                }
            }
        }

        let identity = (0..order)
            .find(|&e| (0..order).all(|x| mul(e, x) == x && mul(x, e) == x))
            .ok_or(GroupError::NoIdentity)?;

        for x in 0..order {
            for y in 0..order {
                for z in 0..order {
                    if mul(mul(x, y), z) != mul(x, mul(y, z)) {
                        return Err(GroupError::NotAssociative(x, y, z));
                    }
                }
            }
        }

        let mut inv = Vec::with_capacity(order);
        for x in 0..order {
            inv.push(
                (0..order)
                    .find(|&y| mul(x, y) == identity && mul(y, x) == identity)
                    .ok_or(GroupError::NoInverse(x))?,
            );
        }

        Ok(FiniteGroup {
            order,
            mul: table,
            identity,
            inv,
            label: label.into(),
        })
    }

    /// The cyclic group `Z_n` under addition mod n.
    pub fn cyclic(n: usize) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::EmptyGroup);
        }
        let mut table = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                table[i * n + j] = (i + j) % n;
            }
        }
        Self::from_table(format!("Z{n}"), n, table)
    }

    /// The dihedral group of order `2m`: `r^m = s^2 = 1`, `s r s = r^-1`.
    /// Element `i < m` is the rotation `r^i`; element `m + i` is `s r^i`.
    pub fn dihedral(m: usize) -> Result<Self, GroupError> {
        if m == 0 {
            return Err(GroupError::EmptyGroup);
        }
        let n = 2 * m;
        let mut table = vec![0; n * n];
        for f1 in 0..2 {
            for i1 in 0..m {
                for f2 in 0..2 {
                    for i2 in 0..m {
                        // (s^f1 r^i1)(s^f2 r^i2): moving s^f2 left flips the sign of i1.
                        let (f, i) = if f2 == 0 {
                            (f1, (i1 + i2) % m)
                        } else {
                            (f1 ^ 1, (m + i2 - i1) % m)
                        };
                        table[(f1 * m + i1) * n + (f2 * m + i2)] = f * m + i;
                    }
                }
            }
        }
        Self::from_table(format!("D{m}"), n, table)
    }

    /// Componentwise direct product; element `(x, y)` has index `x*|h| + y`.
    pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Self {
        let n = g.order * h.order;
        let mut table = vec![0; n * n];
        for x1 in 0..g.order {
            for y1 in 0..h.order {
                for x2 in 0..g.order {
                    for y2 in 0..h.order {
                        let a = x1 * h.order + y1;
                        let b = x2 * h.order + y2;
                        table[a * n + b] = g.mul(x1, x2) * h.order + h.mul(y1, y2);
                    }
                }
            }
        }
        Self::from_table(format!("{}x{}", g.label, h.label), n, table)
            .expect("product of valid groups is a valid group")
    }

    /// The quaternion group `Q_8` on `1, i, j, k, -1, -i, -j, -k`.
    pub fn quaternion() -> Self {
        // (basis, sign) product table for 1, i, j, k.
        const BASIS: [[(usize, usize); 4]; 4] = [
            [(0, 0), (1, 0), (2, 0), (3, 0)],
            [(1, 0), (0, 1), (3, 0), (2, 1)],
            [(2, 0), (3, 1), (0, 1), (1, 0)],
            [(3, 0), (2, 0), (1, 1), (0, 1)],
        ];
        let mut table = vec![0; 64];
        for s1 in 0..2 {
            for b1 in 0..4 {
                for s2 in 0..2 {
                    for b2 in 0..4 {
                        let (b, s) = BASIS[b1][b2];
                        table[(s1 * 4 + b1) * 8 + (s2 * 4 + b2)] = ((s1 ^ s2 ^ s) * 4) + b;
                    }
                }
            }
        }
        Self::from_table("Q8", 8, table).expect("Q8 table is a valid group")
    }

    /// The alternating group `A_4` as the twelve even permutations of four
    /// points in lexicographic order; multiplication is composition.
    pub fn alternating_4() -> Self {
        let mut perms: Vec<[usize; 4]> = Vec::new();
        let mut items = [0, 1, 2, 3];
        permutations(&mut items, 0, &mut perms);
        perms.retain(|p| parity(p) == 0);
        perms.sort();
        let n = perms.len();
        let index_of = |p: &[usize; 4]| perms.iter().position(|q| q == p).unwrap();
        let mut table = vec![0; n * n];
        for (a, p) in perms.iter().enumerate() {
            for (b, q) in perms.iter().enumerate() {
                let composed = [p[q[0]], p[q[1]], p[q[2]], p[q[3]]];
                table[a * n + b] = index_of(&composed);
            }
        }
        Self::from_table("A4", n, table).expect("A4 table is a valid group")
    }

    /// The dicyclic group `Dic_3` of order 12: `a^6 = 1`, `b^2 = a^3`,
    /// `b a b^-1 = a^-1`. Element `j*6 + i` is `a^i b^j`.
    pub fn dicyclic_3() -> Self {
        let n = 12;
        let mut table = vec![0; n * n];
        for j1 in 0..2 {
            for i1 in 0..6 {
                for j2 in 0..2 {
                    for i2 in 0..6 {
                        let (i, j) = if j1 == 0 {
                            ((i1 + i2) % 6, j2)
                        } else if j2 == 0 {
                            ((6 + i1 - i2) % 6, 1)
                        } else {
                            ((6 + i1 - i2 + 3) % 6, 0)
                        };
                        table[(j1 * 6 + i1) * n + (j2 * 6 + i2)] = j * 6 + i;
                    }
                }
            }
        }
        Self::from_table("Dic3", n, table).expect("Dic3 table is a valid group")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.order + y]
    }

    #[inline]
    pub fn inverse(&self, x: usize) -> usize {
        self.inv[x]
    }

    /// `x^k` for `k >= 0`.
    pub fn power(&self, x: usize, k: usize) -> usize {
        let mut acc = self.identity;
        for _ in 0..k {
            acc = self.mul(acc, x);
        }
        acc
    }

    /// Multiplicative order of an element.
    pub fn element_order(&self, x: usize) -> usize {
        let mut acc = x;
        let mut k = 1;
        while acc != self.identity {
            acc = self.mul(acc, x);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|x| (x..self.order).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    pub fn is_cyclic(&self) -> bool {
        (0..self.order).any(|x| self.element_order(x) == self.order)
    }

    /// The empty subset of this group.
    pub fn empty_subset(&self) -> GroupSubset {
        BitSet::empty(self.order)
    }

    /// Full element set.
    pub fn full_subset(&self) -> GroupSubset {
        BitSet::full(self.order)
    }

    pub fn subset<I: IntoIterator<Item = usize>>(&self, indices: I) -> GroupSubset {
        BitSet::from_indices(self.order, indices)
    }

    /// `S^-1 = { x^-1 : x in S }`.
    pub fn inverse_set(&self, s: &GroupSubset) -> GroupSubset {
        self.subset(s.iter().map(|x| self.inv[x]))
    }

    /// `aS`.
    pub fn left_translate(&self, a: usize, s: &GroupSubset) -> GroupSubset {
        self.subset(s.iter().map(|x| self.mul(a, x)))
    }

    /// `Sa`.
    pub fn right_translate(&self, s: &GroupSubset, a: usize) -> GroupSubset {
        self.subset(s.iter().map(|x| self.mul(x, a)))
    }

    /// Minkowski product `AB = { xy : x in A, y in B }`.
    pub fn minkowski(&self, a: &GroupSubset, b: &GroupSubset) -> GroupSubset {
        let mut out = self.empty_subset();
        for x in a.iter() {
            for y in b.iter() {
                out.insert(self.mul(x, y));
            }
        }
        out
    }

    /// `S with the identity adjoined`.
    pub fn with_identity(&self, s: &GroupSubset) -> GroupSubset {
        let mut t = s.clone();
        t.insert(self.identity);
        t
    }

    /// Closure of `s` (plus the identity) under multiplication and inverses.
    pub fn subgroup_generated(&self, s: &GroupSubset) -> GroupSubset {
        let mut h = BitSet::singleton(self.order, self.identity);
        let mut frontier: Vec<usize> = vec![self.identity];
        let gens: Vec<usize> = s.iter().collect();
        while let Some(x) = frontier.pop() {
            for &g in &gens {
                for y in [self.mul(x, g), self.mul(x, self.inv[g])] {
                    if !h.contains(y) {
                        h.insert(y);
                        frontier.push(y);
                    }
                }
            }
        }
        h
    }

    /// True when `s` generates the whole group.
    pub fn is_generating(&self, s: &GroupSubset) -> bool {
        self.subgroup_generated(s).len() == self.order
    }

    /// Every subgroup, including the trivial one and the whole group,
    /// sorted canonically. Found by closing known subgroups under one
    /// extra generator until no new subgroup appears.
    pub fn subgroups(&self) -> Vec<GroupSubset> {
        let trivial = BitSet::singleton(self.order, self.identity);
        let mut found = vec![trivial];
        let mut i = 0;
        while i < found.len() {
            let h = found[i].clone();
            for x in 0..self.order {
                if h.contains(x) {
                    continue;
                }
                let mut gens = h.clone();
                gens.insert(x);
                let extended = self.subgroup_generated(&gens);
                if !found.contains(&extended) {
                    found.push(extended);
                }
            }
            i += 1;
        }
        found.sort();
        found
    }

    /// `{ x : xS = S }`; always a subgroup.
    pub fn left_stabilizer(&self, s: &GroupSubset) -> GroupSubset {
        self.subset((0..self.order).filter(|&x| self.left_translate(x, s) == *s))
    }

    /// True when neither `S` nor `S^-1` is left-periodic, i.e. both left
    /// stabilizers are trivial.
    pub fn is_aperiodic(&self, s: &GroupSubset) -> bool {
        let trivial = BitSet::singleton(self.order, self.identity);
        self.left_stabilizer(s) == trivial && self.left_stabilizer(&self.inverse_set(s)) == trivial
    }
}

fn permutations(items: &mut [usize; 4], k: usize, out: &mut Vec<[usize; 4]>) {
    if k == items.len() {
        out.push(*items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, out);
        items.swap(k, i);
    }
}

fn parity(p: &[usize; 4]) -> usize {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2
}

/// One representative per isomorphism class for every order up to
/// `max_order`; errors above [`CATALOG_MAX_ORDER`].
pub fn small_group_catalog(max_order: usize) -> Result<Vec<FiniteGroup>, GroupError> {
    if max_order > CATALOG_MAX_ORDER {
        return Err(GroupError::CatalogCapExceeded {
            requested: max_order,
            cap: CATALOG_MAX_ORDER,
        });
    }
    let z = |n: usize| FiniteGroup::cyclic(n).expect("n >= 1");
    let d = |m: usize| FiniteGroup::dihedral(m).expect("m >= 1");
    let prod = FiniteGroup::direct_product;
    let mut groups: Vec<FiniteGroup> = Vec::new();
    for order in 1..=max_order {
        match order {
            4 => groups.extend([z(4), prod(&z(2), &z(2))]),
            6 => groups.extend([z(6), d(3)]),
            8 => groups.extend([
                z(8),
                prod(&z(4), &z(2)),
                prod(&prod(&z(2), &z(2)), &z(2)),
                d(4),
                FiniteGroup::quaternion(),
            ]),
            9 => groups.extend([z(9), prod(&z(3), &z(3))]),
            10 => groups.extend([z(10), d(5)]),
            12 => groups.extend([
                z(12),
                prod(&z(6), &z(2)),
                d(6),
                FiniteGroup::alternating_4(),
                FiniteGroup::dicyclic_3(),
            ]),
            n => groups.push(z(n)),
        }
    }
    Ok(groups)
}

/// Witness that the complement of a set is `{a, ra, .., r^j a}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoprogressionWitness {
    pub ratio: usize,
    pub anchor: usize,
    pub complement: Vec<usize>,
}

impl CoprogressionWitness {
    /// Regenerates the progression from `(ratio, anchor)` and checks it
    /// reproduces the complement of `s_tilde` exactly.
    pub fn verify(&self, g: &FiniteGroup, s_tilde: &GroupSubset) -> bool {
        let c = s_tilde.complement();
        if self.complement.len() != c.len() || self.ratio == g.identity() {
            return false;
        }
        let mut regen = g.empty_subset();
        let mut x = self.anchor;
        for (k, &listed) in self.complement.iter().enumerate() {
            if listed != x || regen.contains(x) {
                return false;
            }
            regen.insert(x);
            if k + 1 < self.complement.len() {
                x = g.mul(self.ratio, x);
            }
        }
        regen == c
    }
}

/// Tries to express the complement of `s_tilde` as `{a, ra, .., r^j a}`
/// for the given ratio. The anchor is the unique element of `C \ rC`;
/// when `rC = C` the complement can only be a full coset of `<r>`, and the
/// smallest element works as anchor.
fn coprogression_for_ratio(
    g: &FiniteGroup,
    c: &GroupSubset,
    r: usize,
) -> Option<CoprogressionWitness> {
    let rc = g.left_translate(r, c);
    let peeled = c.difference(&rc);
    let anchor = match peeled.len() {
        0 => c.min_index()?,
        1 => peeled.min_index()?,
        _ => return None,
    };
    let mut listed = Vec::with_capacity(c.len());
    let mut seen = g.empty_subset();
    let mut x = anchor;
    for _ in 0..c.len() {
        if seen.contains(x) {
            return None;
        }
        seen.insert(x);
        listed.push(x);
        x = g.mul(r, x);
    }
    if seen == *c {
        Some(CoprogressionWitness {
            ratio: r,
            anchor,
            complement: listed,
        })
    } else {
        None
    }
}

/// All ratios `r != 1` for which `s_tilde` is a right r-coprogression, in
/// element-index order.
pub fn right_coprogression_witnesses(
    g: &FiniteGroup,
    s_tilde: &GroupSubset,
) -> Result<Vec<CoprogressionWitness>, GroupError> {
    if !s_tilde.contains(g.identity()) {
        return Err(GroupError::IdentityNotInSet);
    }
    let c = s_tilde.complement();
    if c.is_empty() {
        return Err(GroupError::EmptyComplement);
    }
    Ok((0..g.order())
        .filter(|&r| r != g.identity())
        .filter_map(|r| coprogression_for_ratio(g, &c, r))
        .collect())
}

/// First coprogression witness in ratio order, or `None` when the
/// complement is not a right r-coprogression for any `r != 1`.
pub fn detect_right_coprogression(
    g: &FiniteGroup,
    s_tilde: &GroupSubset,
) -> Result<Option<CoprogressionWitness>, GroupError> {
    Ok(right_coprogression_witnesses(g, s_tilde)?
        .into_iter()
        .next())
}

/// Parses the group mini-language: `Z<n>`, `D<m>`, `Q8`, `A4`, `Dic3`,
/// joined by `x` for direct products (e.g. `Z2xZ4`). Case-insensitive.
pub fn parse_group_spec(spec: &str) -> Result<FiniteGroup, GroupError> {
    let bad = || GroupError::BadGroupSpec(spec.to_string());
    let mut parts = spec.trim().split(['x', 'X']);
    let mut group = parse_atom(parts.next().ok_or_else(bad)?).ok_or_else(bad)?;
    for part in parts {
        let factor = parse_atom(part).ok_or_else(bad)?;
        group = FiniteGroup::direct_product(&group, &factor);
    }
    Ok(group)
}

fn parse_atom(token: &str) -> Option<FiniteGroup> {
    let t = token.trim().to_ascii_uppercase();
    match t.as_str() {
        "Q8" => return Some(FiniteGroup::quaternion()),
        "A4" => return Some(FiniteGroup::alternating_4()),
        "DIC3" => return Some(FiniteGroup::dicyclic_3()),
        _ => {}
    }
    if t.len() < 2 {
        return None;
    }
    let (head, digits) = t.split_at(1);
    let n: usize = digits.parse().ok()?;
    match head {
        "Z" => FiniteGroup::cyclic(n).ok(),
        "D" => FiniteGroup::dihedral(n).ok(),
        _ => None,
    }
}

/// Parses a comma-separated element list such as `1,2,3` into a subset of
/// a group of the given order. An empty string is the empty set.
pub fn parse_subset(spec: &str, order: usize) -> Result<GroupSubset, GroupError> {
    let mut out = BitSet::empty(order);
    if spec.trim().is_empty() {
        return Ok(out);
    }
    for token in spec.split(',') {
        let index: usize = token
            .trim()
            .parse()
            .map_err(|_| GroupError::BadSubsetSpec(spec.to_string()))?;
        if index >= order {
            return Err(GroupError::SubsetOutOfRange { index, order });
        }
        out.insert(index);
    }
    Ok(out)
}
