//! Fraction-free elimination over an exact field.

use super::Cyclotomic;

/// Exact rank by Bareiss elimination. Every division is exact, so the
/// intermediate entries stay as small as the determinantal minors.
pub fn rank(rows: &[Vec<Cyclotomic>]) -> usize {
    let mut m: Vec<Vec<Cyclotomic>> = rows.iter().filter(|r| r.iter().any(|c| !c.is_zero())).cloned().collect();
    if m.is_empty() {
        return 0;
    }
    let ncols = m[0].len();
    let nrows = m.len();
    let mut prev = Cyclotomic::from_int(1);
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        for i in r + 1..nrows {
            for j in c + 1..ncols {
                let v = &(&m[r][c] * &m[i][j]) - &(&m[i][c] * &m[r][j]);
                m[i][j] = &v / &prev;
            }
            m[i][c] = Cyclotomic::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}

/// Solve `a x = b` exactly. Returns `None` if the system is inconsistent,
/// otherwise one solution (free variables set to zero).
pub fn solve(a: &[Vec<Cyclotomic>], b: &[Cyclotomic]) -> Option<Vec<Cyclotomic>> {
    let nrows = a.len();
    let ncols = if nrows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<Cyclotomic>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].inv().unwrap();
        for j in c..=ncols {
            m[r][j] = &m[r][j] * &inv;
        }
        for i in 0..nrows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..=ncols {
                    let t = &f * &m[r][j];
                    m[i][j] = &m[i][j] - &t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[ncols].is_zero()) {
        return None;
    }
    let mut x = vec![Cyclotomic::zero(); ncols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = m[i][ncols].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: i64) -> Cyclotomic {
        Cyclotomic::from_int(n)
    }

    #[test]
    fn rank_of_small_matrices() {
        let m = vec![vec![c(1), c(2), c(3)], vec![c(2), c(4), c(6)], vec![c(0), c(1), c(1)]];
        assert_eq!(rank(&m), 2);
        assert_eq!(rank(&[vec![c(0), c(0)]]), 0);
        let z = Cyclotomic::root_of_unity(5, 1);
        let m = vec![vec![z.clone(), c(1)], vec![&z * &z, z.clone()]];
        assert_eq!(rank(&m), 1);
    }

    #[test]
    fn solve_overdetermined() {
        let a = vec![vec![c(1), c(1)], vec![c(1), c(-1)], vec![c(2), c(0)]];
        let x = solve(&a, &[c(3), c(1), c(4)]).unwrap();
        assert_eq!(x, vec![c(2), c(1)]);
        assert!(solve(&a, &[c(3), c(1), c(5)]).is_none());
    }
}
