//! Execution helpers shared by the data-parallel inner loops.
//!
//! With the `parallel` feature the closures run on the rayon thread pool;
//! without it they run as plain loops. Both paths are bit-identical: every
//! work item writes its own output slot and any reduction is performed in
//! index order by the caller.

/// Map `f` over `0..n`, preserving index order in the output.
#[cfg(feature = "parallel")]
pub fn map_indexed<U, F>(n: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync,
{
    use rayon::prelude::*;
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_indexed<U, F>(n: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync,
{
    (0..n).map(f).collect()
}

/// Always-sequential variant of [`map_indexed`]; the benches compare the two.
pub fn map_indexed_seq<U, F>(n: usize, f: F) -> Vec<U>
where
    F: Fn(usize) -> U,
{
    (0..n).map(f).collect()
}

/// Apply `f` to equally sized mutable chunks of `data`, passing the chunk
/// index. Chunks are disjoint, so parallel and sequential execution agree.
#[cfg(feature = "parallel")]
pub fn for_each_chunk_mut<T, F>(data: &mut [T], chunk: usize, f: F)
where
    T: Send,
    F: Fn(usize, &mut [T]) + Sync,
{
    use rayon::prelude::*;
    data.par_chunks_mut(chunk)
        .enumerate()
        .for_each(|(i, c)| f(i, c));
}

#[cfg(not(feature = "parallel"))]
pub fn for_each_chunk_mut<T, F>(data: &mut [T], chunk: usize, f: F)
where
    T: Send,
    F: Fn(usize, &mut [T]) + Sync,
{
    for (i, c) in data.chunks_mut(chunk).enumerate() {
        f(i, c);
    }
}

/// Always-sequential variant of [`for_each_chunk_mut`].
pub fn for_each_chunk_mut_seq<T, F>(data: &mut [T], chunk: usize, f: F)
where
    F: Fn(usize, &mut [T]),
{
    for (i, c) in data.chunks_mut(chunk).enumerate() {
        f(i, c);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_matches_sequential() {
        let a: Vec<f64> = map_indexed(100, |i| (i as f64).sin());
        let b: Vec<f64> = map_indexed_seq(100, |i| (i as f64).sin());
        assert_eq!(a, b);

        let mut x = vec![0.0f64; 64];
        let mut y = vec![0.0f64; 64];
        for_each_chunk_mut(&mut x, 8, |i, c| c.iter_mut().for_each(|v| *v = i as f64));
        for_each_chunk_mut_seq(&mut y, 8, |i, c| c.iter_mut().for_each(|v| *v = i as f64));
        assert_eq!(x, y);
    }
}
