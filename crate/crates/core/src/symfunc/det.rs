//! Division-free determinants over a commutative ring.

use std::collections::HashMap;

pub trait Ring: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
}

/// Laplace expansion along rows, memoized on the set of unused columns, so
/// the cost is at most `O(n·2^n)` ring operations; zero entries are skipped.
pub fn determinant<R: Ring>(m: &[Vec<R>]) -> R {
    let n = m.len();
    assert!(n < 32, "matrix too large");
    assert!(m.iter().all(|r| r.len() == n), "matrix must be square");
    let mut minors = HashMap::new();
    minor(m, 0, mask_of(n), &mut minors)
}

fn mask_of(n: usize) -> u32 {
    if n == 0 {
        0
    } else {
        u32::MAX >> (32 - n)
    }
}

/// Determinant of rows `row..` restricted to the columns in `mask`.
fn minor<R: Ring>(m: &[Vec<R>], row: usize, mask: u32, memo: &mut HashMap<u32, R>) -> R {
    if mask == 0 {
        return R::one();
    }
    if let Some(v) = memo.get(&mask) {
        return v.clone();
    }
    let mut acc = R::zero();
    let mut position = 0;
    for col in 0..m.len() {
        if mask & (1 << col) == 0 {
            continue;
        }
        let entry = &m[row][col];
        if !entry.is_zero() {
            let sub = minor(m, row + 1, mask & !(1 << col), memo);
            if !sub.is_zero() {
                let term = entry.mul(&sub);
                acc = if position % 2 == 0 {
                    acc.add(&term)
                } else {
                    acc.add(&term.neg())
                };
            }
        }
        position += 1;
    }
    memo.insert(mask, acc.clone());
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    impl Ring for i64 {
        fn zero() -> Self {
            0
        }
        fn one() -> Self {
            1
        }
        fn is_zero(&self) -> bool {
            *self == 0
        }
        fn add(&self, o: &Self) -> Self {
            self + o
        }
        fn mul(&self, o: &Self) -> Self {
            self * o
        }
        fn neg(&self) -> Self {
            -self
        }
    }

    #[test]
    fn matches_leibniz_on_small_matrices() {
        let m = vec![vec![2i64, -1, 0], vec![1, 3, 4], vec![0, 5, -2]];
        // 2(3·-2 - 4·5) + 1(1·-2 - 0) = -52 - 2
        assert_eq!(determinant(&m), -54);
        let id: Vec<Vec<i64>> = (0..5)
            .map(|i| (0..5).map(|j| (i == j) as i64).collect())
            .collect();
        assert_eq!(determinant(&id), 1);
        let swap = vec![vec![0i64, 1], vec![1, 0]];
        assert_eq!(determinant(&swap), -1);
        assert_eq!(determinant::<i64>(&[]), 1);
    }

    #[test]
    fn vandermonde() {
        let xs = [2i64, 3, 5, 7];
        let m: Vec<Vec<i64>> = xs
            .iter()
            .map(|x| (0..4).map(|k| x.pow(k)).collect())
            .collect();
        let mut want = 1;
        for i in 0..4 {
            for j in i + 1..4 {
                want *= xs[j] - xs[i];
            }
        }
        assert_eq!(determinant(&m), want);
    }
}
