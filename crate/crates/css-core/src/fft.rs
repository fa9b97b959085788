//! Thin wrapper over rustfft for real signals with one-sided spectra.
//!
//! Conventions used throughout the crate, for `n` even, `bins = n/2 + 1`:
//!
//! * forward: `X[f] = sum_t x[t] * exp(-i 2 pi f t / n)`, bins `0..=n/2`;
//! * inverse: `x[t] = (1/n) * [a_0 + 2 * sum_{0<f<n/2} (a_f cos - b_f sin)
//!   + a_{n/2} (-1)^t]`, i.e. the imaginary parts of the DC and Nyquist
//!   bins are ignored.

use rustfft::num_complex::Complex;
use rustfft::{Fft, FftDirection, FftPlanner};
use std::cell::RefCell;
use std::collections::HashMap;
use std::sync::Arc;

thread_local! {
    static PLANS: RefCell<HashMap<(usize, bool), Arc<dyn Fft<f64>>>> =
        RefCell::new(HashMap::new());
}

fn plan(n: usize, inverse: bool) -> Arc<dyn Fft<f64>> {
    PLANS.with(|cache| {
        cache
            .borrow_mut()
            .entry((n, inverse))
            .or_insert_with(|| {
                let dir = if inverse {
                    FftDirection::Inverse
                } else {
                    FftDirection::Forward
                };
                FftPlanner::new().plan_fft(n, dir)
            })
            .clone()
    })
}

/// Forward transform of a real frame; returns `(re, im)` for bins `0..=n/2`.
pub fn rfft(frame: &[f64]) -> (Vec<f64>, Vec<f64>) {
    let n = frame.len();
    let mut buf: Vec<Complex<f64>> = frame.iter().map(|&x| Complex::new(x, 0.0)).collect();
    plan(n, false).process(&mut buf);
    let bins = n / 2 + 1;
    let re = buf[..bins].iter().map(|c| c.re).collect();
    let im = buf[..bins].iter().map(|c| c.im).collect();
    (re, im)
}

/// Inverse transform of a one-sided spectrum back to `n` real samples.
///
/// The imaginary parts of bins 0 and n/2 are dropped, which makes the map
/// from `(re, im)` to samples exactly linear with the adjoint implemented in
/// the fused synthesis op.
pub fn irfft(re: &[f64], im: &[f64], n: usize) -> Vec<f64> {
    let bins = n / 2 + 1;
    assert_eq!(re.len(), bins, "irfft: expected {} bins, got {}", bins, re.len());
    assert_eq!(im.len(), bins, "irfft: re/im length mismatch");
    let mut buf = vec![Complex::new(0.0, 0.0); n];
    buf[0] = Complex::new(re[0], 0.0);
    buf[n / 2] = Complex::new(re[n / 2], 0.0);
    for f in 1..n / 2 {
        buf[f] = Complex::new(re[f], im[f]);
        buf[n - f] = Complex::new(re[f], -im[f]);
    }
    plan(n, true).process(&mut buf);
    let scale = 1.0 / n as f64;
    buf.iter().map(|c| c.re * scale).collect()
}

/// Linear convolution of `x` with `h` via FFT, output length `x + h - 1`.
pub fn fft_convolve(x: &[f64], h: &[f64]) -> Vec<f64> {
    if x.is_empty() || h.is_empty() {
        return Vec::new();
    }
    let out_len = x.len() + h.len() - 1;
    let n = out_len.next_power_of_two();
    let mut xa = vec![Complex::new(0.0, 0.0); n];
    let mut ha = vec![Complex::new(0.0, 0.0); n];
    for (dst, &s) in xa.iter_mut().zip(x) {
        dst.re = s;
    }
    for (dst, &s) in ha.iter_mut().zip(h) {
        dst.re = s;
    }
    let fwd = plan(n, false);
    fwd.process(&mut xa);
    fwd.process(&mut ha);
    for (a, b) in xa.iter_mut().zip(ha.iter()) {
        *a *= *b;
    }
    plan(n, true).process(&mut xa);
    let scale = 1.0 / n as f64;
    xa[..out_len].iter().map(|c| c.re * scale).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rfft_irfft_roundtrip() {
        let n = 512;
        let x: Vec<f64> = (0..n).map(|i| ((i * 7 + 3) as f64 * 0.01).sin()).collect();
        let (re, im) = rfft(&x);
        let y = irfft(&re, &im, n);
        for (a, b) in x.iter().zip(&y) {
            assert!((a - b).abs() < 1e-12, "{a} vs {b}");
        }
    }

    #[test]
    fn convolve_matches_direct() {
        let x = [1.0, 2.0, -1.0, 0.5];
        let h = [0.5, -0.25, 1.0];
        let got = fft_convolve(&x, &h);
        let mut want = vec![0.0; x.len() + h.len() - 1];
        for (i, &xv) in x.iter().enumerate() {
            for (j, &hv) in h.iter().enumerate() {
                want[i + j] += xv * hv;
            }
        }
        for (a, b) in got.iter().zip(&want) {
            assert!((a - b).abs() < 1e-12);
        }
    }
}
