//! Structure of small finite abelian groups given by a multiplication rule.

use std::collections::HashMap;

/// Smith normal form diagonal of a square integer matrix, as invariant
/// factors `d₁ | d₂ | …` with the unit entries dropped.
pub fn smith_diagonal(mut m: Vec<Vec<i128>>) -> Vec<u64> {
    let n = m.len();
    for t in 0..n {
        loop {
            // pivot: smallest nonzero entry of the trailing block
            let mut best: Option<(usize, usize)> = None;
            for i in t..n {
                for j in t..n {
                    if m[i][j] != 0 && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                break;
            };
            m.swap(t, pi);
            for row in m.iter_mut() {
                row.swap(t, pj);
            }
            let piv = m[t][t];
            let mut clean = true;
            for i in t + 1..n {
                let q = m[i][t].div_euclid(piv);
                if q != 0 {
                    for j in t..n {
                        m[i][j] -= q * m[t][j];
                    }
                }
                clean &= m[i][t] == 0;
            }
            for j in t + 1..n {
                let q = m[t][j].div_euclid(piv);
                if q != 0 {
                    for row in m.iter_mut().skip(t) {
                        row[j] -= q * row[t];
                    }
                }
                clean &= m[t][j] == 0;
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..n).flat_map(|i| (t + 1..n).map(move |j| (i, j))).find(|&(i, j)| m[i][j] % piv != 0);
            match bad {
                Some((i, _)) => {
                    for j in t..n {
                        let v = m[i][j];
                        m[t][j] += v;
                    }
                }
                None => break,
            }
        }
    }
    let mut d: Vec<u64> = (0..n).map(|i| m[i][i].unsigned_abs() as u64).filter(|&x| x != 1).collect();
    d.sort_unstable();
    d
}

/// Invariant factors of a direct product of cyclic groups of the given orders.
pub fn invariant_factors(orders: &[u64]) -> Vec<u64> {
    let n = orders.len();
    let m = (0..n)
        .map(|i| (0..n).map(|j| if i == j { orders[i] as i128 } else { 0 }).collect())
        .collect();
    smith_diagonal(m)
}

/// Invariant factors of the abelian group on `0..order` with the given law.
///
/// Generators are adjoined greedily; each new generator contributes one
/// relation expressing its first power inside the previous subgroup.
pub fn group_structure(order: usize, identity: usize, op: impl Fn(usize, usize) -> usize) -> Vec<u64> {
    let mut span: HashMap<usize, Vec<i128>> = HashMap::from([(identity, Vec::new())]);
    let mut relations: Vec<Vec<i128>> = Vec::new();
    while span.len() < order {
        let g = (0..order).find(|x| !span.contains_key(x)).unwrap();
        let r = relations.len();
        let mut power = g;
        let mut k = 1i128;
        while !span.contains_key(&power) {
            power = op(power, g);
            k += 1;
        }
        let mut rel = span[&power].iter().map(|c| -c).collect::<Vec<_>>();
        rel.resize(r, 0);
        rel.push(k);
        relations.push(rel);
        let old: Vec<(usize, Vec<i128>)> = span.iter().map(|(a, b)| (*a, b.clone())).collect();
        for (h, exps) in old {
            let mut x = h;
            for i in 1..k {
                x = op(x, g);
                let mut e = exps.clone();
                e.resize(r, 0);
                e.push(i);
                span.insert(x, e);
            }
        }
        for e in span.values_mut() {
            e.resize(r + 1, 0);
        }
    }
    let n = relations.len();
    let m = relations
        .into_iter()
        .map(|mut row| {
            row.resize(n, 0);
            row
        })
        .collect();
    smith_diagonal(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_products_normalize() {
        assert_eq!(invariant_factors(&[2, 3]), vec![6]);
        assert_eq!(invariant_factors(&[2, 2]), vec![2, 2]);
        assert_eq!(invariant_factors(&[4, 6]), vec![2, 12]);
        assert_eq!(invariant_factors(&[1, 1]), Vec::<u64>::new());
    }

    #[test]
    fn structure_of_z2_times_z4() {
        // elements (a, b) encoded as a*4 + b
        let op = |x: usize, y: usize| ((x / 4 + y / 4) % 2) * 4 + (x % 4 + y % 4) % 4;
        assert_eq!(group_structure(8, 0, op), vec![2, 4]);
    }

    #[test]
    fn structure_of_cyclic_twelve() {
        assert_eq!(group_structure(12, 0, |x, y| (x + y) % 12), vec![12]);
        assert_eq!(group_structure(1, 0, |x, y| x + y), Vec::<u64>::new());
    }
}
