//! Matrix-multiply kernels. Row-parallel with a sequential inner loop, so
//! results do not depend on the thread count.

use crate::par;

/// C[m,n] = A[m,k] * B[k,n]
pub fn mm_nn(a: &[f64], b: &[f64], m: usize, k: usize, n: usize, c: &mut [f64]) {
    debug_assert_eq!(a.len(), m * k);
    debug_assert_eq!(b.len(), k * n);
    debug_assert_eq!(c.len(), m * n);
    par::for_each_chunk_mut(c, n, |i, row| {
        let arow = &a[i * k..(i + 1) * k];
        for (p, &av) in arow.iter().enumerate() {
            if av == 0.0 {
                continue;
            }
            let brow = &b[p * n..(p + 1) * n];
            for (cv, &bv) in row.iter_mut().zip(brow) {
                *cv += av * bv;
            }
        }
    });
}

/// C[m,n] = A[m,k] * B[n,k]^T
pub fn mm_nt(a: &[f64], b: &[f64], m: usize, k: usize, n: usize, c: &mut [f64]) {
    debug_assert_eq!(a.len(), m * k);
    debug_assert_eq!(b.len(), n * k);
    debug_assert_eq!(c.len(), m * n);
    par::for_each_chunk_mut(c, n, |i, row| {
        let arow = &a[i * k..(i + 1) * k];
        for (j, cv) in row.iter_mut().enumerate() {
            let brow = &b[j * k..(j + 1) * k];
            let mut s = 0.0;
            for (&av, &bv) in arow.iter().zip(brow) {
                s += av * bv;
            }
            *cv += s;
        }
    });
}

/// C[m,n] = A[k,m]^T * B[k,n]
pub fn mm_tn(a: &[f64], b: &[f64], m: usize, k: usize, n: usize, c: &mut [f64]) {
    debug_assert_eq!(a.len(), k * m);
    debug_assert_eq!(b.len(), k * n);
    debug_assert_eq!(c.len(), m * n);
    par::for_each_chunk_mut(c, n, |i, row| {
        for p in 0..k {
            let av = a[p * m + i];
            if av == 0.0 {
                continue;
            }
            let brow = &b[p * n..(p + 1) * n];
            for (cv, &bv) in row.iter_mut().zip(brow) {
                *cv += av * bv;
            }
        }
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_products_agree() {
        // A = [[1,2],[3,4]], B = [[5,6],[7,8]]
        let a = [1.0, 2.0, 3.0, 4.0];
        let b = [5.0, 6.0, 7.0, 8.0];

        let mut c = vec![0.0; 4];
        mm_nn(&a, &b, 2, 2, 2, &mut c);
        assert_eq!(c, vec![19.0, 22.0, 43.0, 50.0]);

        // A * B^T where second arg given already transposed as [[5,7],[6,8]]
        let bt = [5.0, 7.0, 6.0, 8.0];
        let mut c2 = vec![0.0; 4];
        mm_nt(&a, &bt, 2, 2, 2, &mut c2);
        assert_eq!(c2, c);

        // A^T^T * B via mm_tn with A stored transposed: [[1,3],[2,4]]
        let at = [1.0, 3.0, 2.0, 4.0];
        let mut c3 = vec![0.0; 4];
        mm_tn(&at, &b, 2, 2, 2, &mut c3);
        assert_eq!(c3, c);
    }
}
