//! Continuous speech separation at desk scale.
//!
//! The crate covers the full pipeline for separating long, partially
//! overlapped recordings into two overlap-free output streams:
//!
//! * [`tensor`] — dense f64 tensors with reverse-mode autodiff and a
//!   finite-difference gradient checker,
//! * [`layers`] — (B)LSTM, transformer encoder and linear layers,
//! * [`dsp`] — STFT analysis/synthesis and WAV I/O,
//! * [`pipeline`] — segmentation, dual-path separator models (RNN and
//!   transformer, plus the convolutional-resampling variant), stitching,
//! * [`metrics`] — PSM targets, SNR/PIT objectives, overlap-ratio reports,
//!   analytic parameter and MAC counters,
//! * [`sim`] — seeded meeting simulation with image-method room impulse
//!   responses,
//! * [`train`] — Adam with warm-up / plateau schedules and the window-level
//!   PIT-SNR training loop,
//! * [`checkpoint`] — flat binary parameter serialization.
//!
//! With the `parallel` feature (on by default) data-parallel inner loops run
//! on rayon; without it the same code runs sequentially. Both modes produce
//! bit-identical results: work items write disjoint outputs and reductions
//! happen in index order.

pub mod checkpoint;
pub mod dsp;
pub mod fft;
pub mod layers;
pub mod metrics;
pub mod par;
pub mod pipeline;
pub mod sim;
pub mod tensor;
pub mod train;
