//! Permutations of `{1, ..., n}`.

use std::fmt;

use crate::error::{domain, internal, Error, Result};

/// A bijection of `{1, ..., n}` stored by its images.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// `images[k - 1] = f(k)`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut hit = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || hit[v] {
                return domain(format!("{images:?} is not a permutation of 1..{n}"));
            }
            hit[v] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds the permutation of degree `n` from disjoint cycles; points not
    /// mentioned are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=n).collect();
        let mut used = vec![false; n + 1];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x == 0 || x > n {
                    return domain(format!("{x} is outside 1..{n}"));
                }
                if used[x] {
                    return domain(format!("{x} occurs in more than one place"));
                }
                used[x] = true;
                images[x - 1] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, k: usize) -> usize {
        self.images[k - 1]
    }

    /// `f∘g`, applying `g` first.
    pub fn compose(&self, g: &Permutation) -> Result<Permutation> {
        if self.degree() != g.degree() {
            return domain(format!(
                "degrees differ: {} and {}",
                self.degree(),
                g.degree()
            ));
        }
        Ok(Permutation {
            images: g.images.iter().map(|&x| self.apply(x)).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (k, &v) in self.images.iter().enumerate() {
            images[v - 1] = k + 1;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    /// The disjoint cycles, each starting at its smallest point, ordered by
    /// that point. Fixed points appear as 1-cycles when asked for.
    pub fn cycles(&self, include_fixpoints: bool) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            if include_fixpoints || cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// `(-1)` to the number of cycles of even length.
    pub fn sign(&self) -> i8 {
        let even = self
            .cycles(false)
            .iter()
            .filter(|c| c.len() % 2 == 0)
            .count();
        if even % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Transpositions `t_1, ..., t_k` with `f = t_1∘...∘t_k`; a cycle
    /// `(n1 ... nr)` contributes `(n1, nr), ..., (n1, n2)`.
    pub fn to_transpositions(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for cycle in self.cycles(false) {
            for &x in cycle[1..].iter().rev() {
                out.push((cycle[0], x));
            }
        }
        out
    }

    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Permutation> {
        if i == j {
            return domain("a transposition needs two distinct points");
        }
        Permutation::from_cycles(n, &[vec![i, j]])
    }
}

/// Book notation `[(1,2)(4,6,5)]`, fixed points elided.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for c in self.cycles(false) {
            let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", parts.join(","))?;
        }
        write!(f, "]")
    }
}

/// Reads cycle notation such as `( 1 2 )( 4 6 5 )` or `[(1,2)(4,6,5)]`.
/// The outer brackets are optional; `[]` and the empty string are the
/// identity.
pub fn parse_cycles(text: &str) -> Result<Vec<Vec<usize>>> {
    let err = |pos: usize, msg: &str| Error::Parse {
        pos,
        msg: msg.to_string(),
    };
    let mut cycles = Vec::new();
    let mut current: Option<Vec<usize>> = None;
    let mut chars = text.char_indices().peekable();
    while let Some((pos, ch)) = chars.next() {
        match ch {
            '[' | ']' if current.is_none() => {}
            '(' => {
                if current.is_some() {
                    return Err(err(pos, "nested '('"));
                }
                current = Some(Vec::new());
            }
            ')' => match current.take() {
                Some(c) if !c.is_empty() => cycles.push(c),
                Some(_) => return Err(err(pos, "empty cycle")),
                None => return Err(err(pos, "unmatched ')'")),
            },
            ',' if current.is_some() => {}
            c if c.is_whitespace() => {}
            c if c.is_ascii_digit() => {
                let Some(cycle) = current.as_mut() else {
                    return Err(err(pos, "number outside a cycle"));
                };
                let mut end = pos + c.len_utf8();
                while let Some(&(p, d)) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    end = p + d.len_utf8();
                    chars.next();
                }
                let v: usize = text[pos..end]
                    .parse()
                    .map_err(|_| err(pos, "number too large"))?;
                cycle.push(v);
            }
            _ => return Err(err(pos, &format!("unexpected character {ch:?}"))),
        }
    }
    if current.is_some() {
        return Err(err(text.len(), "missing ')'"));
    }
    Ok(cycles)
}

/// The left regular representation of a group given by its table:
/// `table[i][j]` is the index of `g_i g_j`. Element `b` maps to the
/// permutation `π_b` with `b g_j = g_{π_b(j)}`, written on `1..=n`.
pub fn cayley_embed(table: &[Vec<usize>]) -> Result<Vec<Permutation>> {
    let n = table.len();
    if n == 0 {
        return domain("empty group table");
    }
    for (i, row) in table.iter().enumerate() {
        if row.len() != n {
            return domain(format!("row {i} has length {}, expected {n}", row.len()));
        }
        let mut hit = vec![false; n];
        for &v in row {
            if v >= n {
                return domain(format!("entry {v} in row {i} is out of range"));
            }
            if hit[v] {
                return domain(format!("not a Latin square: row {i} repeats {v}"));
            }
            hit[v] = true;
        }
    }
    for j in 0..n {
        let mut hit = vec![false; n];
        for row in table {
            if hit[row[j]] {
                return domain(format!("not a Latin square: column {j} repeats {}", row[j]));
            }
            hit[row[j]] = true;
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if table[table[i][j]][k] != table[i][table[j][k]] {
                    return domain(format!("associativity fails at ({i}, {j}, {k})"));
                }
            }
        }
    }
    let perms: Vec<Permutation> = table
        .iter()
        .map(|row| Permutation {
            images: row.iter().map(|&v| v + 1).collect(),
        })
        .collect();
    for a in 0..n {
        for b in 0..n {
            if perms[table[a][b]] != perms[a].compose(&perms[b])? {
                return Err(internal("embedding is not a homomorphism"));
            }
        }
    }
    let mut distinct = perms.clone();
    distinct.sort_by(|x, y| x.images.cmp(&y.images));
    distinct.dedup();
    if distinct.len() != n {
        return Err(internal("embedding is not injective"));
    }
    Ok(perms)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(images: &[usize]) -> Permutation {
        Permutation::from_images(images.to_vec()).unwrap()
    }

    fn cyc(n: usize, text: &str) -> Permutation {
        Permutation::from_cycles(n, &parse_cycles(text).unwrap()).unwrap()
    }

    #[test]
    fn appendix_examples() {
        let f = p(&[2, 1, 3, 6, 4, 5]);
        let g = p(&[2, 3, 4, 1, 6, 5]);
        assert_eq!(f.cycles(true), vec![vec![1, 2], vec![3], vec![4, 6, 5]]);
        assert_eq!(g.cycles(false), vec![vec![1, 2, 3, 4], vec![5, 6]]);
        assert_eq!(f.compose(&g).unwrap(), cyc(6, "(2,3,6,4)"));
        assert_eq!(g.compose(&f).unwrap(), cyc(6, "(1,3,4,5)"));
        assert_eq!(f.inverse(), cyc(6, "[(2,1)(5,6,4)]"));
        assert_eq!(g.inverse(), cyc(6, "[(4,3,2,1)(6,5)]"));
        assert_eq!(f.compose(&Permutation::identity(6)).unwrap(), f);
        assert_eq!(
            Permutation::identity(6).cycles(false),
            Vec::<Vec<usize>>::new()
        );
        assert_eq!(Permutation::identity(6).to_string(), "[]");
        assert_eq!(f.to_string(), "[(1,2)(4,6,5)]");
    }

    #[test]
    fn matrix_inverse() {
        let f = p(&[2, 4, 1, 3]);
        assert_eq!(f.inverse(), p(&[3, 1, 4, 2]));
        assert!(f.compose(&f.inverse()).unwrap().is_identity());
    }

    #[test]
    fn signs() {
        assert_eq!(cyc(8, "(1,7,8)(2,5,4,3)(6)").sign(), -1);
        assert_eq!(Permutation::identity(5).sign(), 1);
        assert_eq!(Permutation::transposition(5, 2, 4).unwrap().sign(), -1);
    }

    #[test]
    fn transpositions() {
        let f = cyc(8, "(1,7,8)(2,5,4,3)");
        let ts = f.to_transpositions();
        assert_eq!(ts, vec![(1, 8), (1, 7), (2, 3), (2, 4), (2, 5)]);
        let mut acc = Permutation::identity(8);
        for (i, j) in ts {
            acc = acc
                .compose(&Permutation::transposition(8, i, j).unwrap())
                .unwrap();
        }
        assert_eq!(acc, f);
    }

    #[test]
    fn parsing() {
        assert_eq!(
            parse_cycles("( 1 2 )( 4 6 5 )").unwrap(),
            vec![vec![1, 2], vec![4, 6, 5]]
        );
        assert_eq!(parse_cycles("[(1,2)(3)(4,6,5)]").unwrap().len(), 3);
        assert!(parse_cycles("").unwrap().is_empty());
        assert!(matches!(
            parse_cycles("(1 2"),
            Err(Error::Parse { pos: 4, .. })
        ));
        assert!(matches!(
            parse_cycles("(1 x)"),
            Err(Error::Parse { pos: 3, .. })
        ));
        assert!(parse_cycles("()").is_err());
        assert!(Permutation::from_cycles(3, &[vec![1, 2], vec![2, 3]]).is_err());
        assert!(Permutation::from_cycles(3, &[vec![1, 4]]).is_err());
        assert!(Permutation::from_images(vec![1, 1]).is_err());
        assert!(p(&[1, 2]).compose(&p(&[1])).is_err());
    }

    #[test]
    fn cayley() {
        let z3: Vec<Vec<usize>> = (0..3)
            .map(|i| (0..3).map(|j| (i + j) % 3).collect())
            .collect();
        let e = cayley_embed(&z3).unwrap();
        assert!(e[0].is_identity());
        assert_eq!(e[1].cycles(false), vec![vec![1, 2, 3]]);
        assert_eq!(e[2], e[1].compose(&e[1]).unwrap());

        let units = [1usize, 5, 7, 11];
        let idx = |v: usize| units.iter().position(|&u| u == v).unwrap();
        let z12: Vec<Vec<usize>> = units
            .iter()
            .map(|&a| units.iter().map(|&b| idx(a * b % 12)).collect())
            .collect();
        let e = cayley_embed(&z12).unwrap();
        assert_eq!(e.len(), 4);
        for x in &e {
            assert!(x.compose(x).unwrap().is_identity());
        }
        assert_eq!(
            cayley_embed(&[vec![0]]).unwrap(),
            vec![Permutation::identity(1)]
        );
        assert!(cayley_embed(&[vec![0, 1], vec![0, 1]]).is_err());
        let bad = vec![vec![0, 1, 2], vec![1, 0, 2], vec![2, 1, 0]];
        assert!(cayley_embed(&bad).is_err());
    }
}
