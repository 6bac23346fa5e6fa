//! Deterministic fixtures shared by the benchmarks in `benches/`.

use ptq_core::planewave::{Event, Frequency, PlaneWaveState, TwoSpinor};
use ptq_core::scalars::ComplexFloat;

/// A fixed grid of `n` events spread over [−span, span]⁴.
pub fn event_grid(n: usize, span: f64) -> Vec<Event> {
    (0..n)
        .map(|k| {
            let t = k as f64 / n.max(1) as f64;
            std::array::from_fn(|a| span * (2.0 * ((t * (a as f64 + 1.7) * 7.3).fract()) - 1.0))
        })
        .collect()
}

pub fn sample_state(kind: Frequency, c: f64) -> PlaneWaveState {
    let w = TwoSpinor::normalized(ComplexFloat::new(0.6, 0.1), ComplexFloat::new(-0.2, 0.7)).expect("nonzero spinor");
    PlaneWaveState::new(kind, [1.5, -0.75, 2.25], w, 1.0, c, 1.0).expect("valid state")
}
