use crate::error::{Error, Result};
use crate::report::AxiomReport;

use super::table::{invert_permutation, OperationTable};

/// A finite group given by its Cayley table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    table: OperationTable,
    identity: usize,
    inverse: Vec<usize>,
}

impl GroupTable {
    /// Validates the table as a group with the given identity.
    pub fn new(table: OperationTable, identity: usize) -> Result<Self> {
        if identity >= table.size() {
            return Err(Error::InvalidTable(format!("identity {identity} out of range")));
        }
        let report = check_group(&table, identity);
        if !report.valid {
            return Err(Error::precondition("table is not a group", report));
        }
        let n = table.size();
        let inverse = (0..n)
            .map(|g| (0..n).find(|&h| table.get(g, h) == identity).unwrap())
            .collect();
        Ok(GroupTable {
            table,
            identity,
            inverse,
        })
    }

    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0);
        Self::new(OperationTable::from_fn(n, |a, b| (a + b) % n), 0).unwrap()
    }

    /// Direct product; element `(a, b)` has index `a * |other| + b`.
    pub fn product(&self, other: &GroupTable) -> Self {
        let m = other.order();
        let t = OperationTable::from_fn(self.order() * m, |x, y| {
            self.mul(x / m, y / m) * m + other.mul(x % m, y % m)
        });
        Self::new(t, self.identity * m + other.identity).unwrap()
    }

    /// The symmetric group on `n` points. Elements are the permutations of
    /// `0..n` in lexicographic order (index 0 is the identity), and the
    /// product is composition `(gh)(i) = g(h(i))`.
    pub fn symmetric(n: usize) -> Self {
        let perms = permutations(n);
        Self::from_permutations(&perms)
    }

    /// The dihedral group of the `n`-gon as permutations of its vertices.
    pub fn dihedral(n: usize) -> Self {
        assert!(n >= 3);
        let mut perms: Vec<Vec<usize>> = Vec::new();
        for k in 0..n {
            perms.push((0..n).map(|i| (i + k) % n).collect());
            perms.push((0..n).map(|i| (k + n - i) % n).collect());
        }
        perms.sort();
        Self::from_permutations(&perms)
    }

    /// The group of the given permutations (must be closed under composition).
    pub fn from_permutations(perms: &[Vec<usize>]) -> Self {
        let index = |p: &Vec<usize>| perms.iter().position(|q| q == p).expect("not closed");
        let t = OperationTable::from_fn(perms.len(), |a, b| {
            let c: Vec<usize> = perms[b].iter().map(|&i| perms[a][i]).collect();
            index(&c)
        });
        let n = perms.first().map_or(0, |p| p.len());
        let id: Vec<usize> = (0..n).collect();
        Self::new(t, index(&id)).unwrap()
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.table.size()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table.get(a, b)
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    #[inline]
    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverses(&self) -> &[usize] {
        &self.inverse
    }

    pub fn table(&self) -> &OperationTable {
        &self.table
    }

    /// `h^{-1} g h`
    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(self.inv(h), g), h)
    }

    pub fn pow(&self, g: usize, n: usize) -> usize {
        (0..n).fold(self.identity, |acc, _| self.mul(acc, g))
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> usize {
        (0..self.order()).map(|g| self.element_order(g)).fold(1, lcm)
    }

    pub fn is_abelian(&self) -> bool {
        self.table.is_commutative()
    }

    pub fn is_automorphism(&self, phi: &[usize]) -> bool {
        phi.len() == self.order()
            && super::table::is_permutation(phi)
            && (0..self.order()).all(|a| (0..self.order()).all(|b| phi[self.mul(a, b)] == self.mul(phi[a], phi[b])))
    }

    pub fn inverse_permutation(&self) -> Vec<usize> {
        invert_permutation(&self.inverse)
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Associativity, identity and inverses, exhaustively.
pub(crate) fn check_group(t: &OperationTable, identity: usize) -> AxiomReport {
    let n = t.size();
    let mut r = AxiomReport::new();
    for a in 0..n {
        for b in 0..n {
            let ab = t.get(a, b);
            for c in 0..n {
                r.check(t.get(ab, c) == t.get(a, t.get(b, c)), "G-assoc", &[a, b, c]);
            }
        }
    }
    if identity >= n {
        r.record("G-identity", &[identity]);
        return r;
    }
    for g in 0..n {
        r.check(t.get(identity, g) == g && t.get(g, identity) == g, "G-identity", &[g]);
        r.check(
            (0..n).any(|h| t.get(g, h) == identity && t.get(h, g) == identity),
            "G-inverse",
            &[g],
        );
    }
    r
}
