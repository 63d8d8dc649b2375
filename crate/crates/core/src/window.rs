//! Sliding autonomy window and the Autonomous Classification Ratio (ACR).

use alloc::collections::VecDeque;

/// One ACR observation: the ratio of autonomous completions within the time
/// frame ending at `index`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AcrPoint {
    pub index: usize,
    /// Always a multiple of `1 / window_size`, in `[0, 1]`.
    pub acr: f64,
}

/// Fixed-capacity FIFO of binary contributions.
///
/// The queue starts pre-filled with zeros, so the ACR series begins at zero
/// and every push keeps the queue at exactly `window_size` slots: the oldest
/// contribution is dequeued as the new one is enqueued.
#[derive(Debug, Clone)]
pub struct AcrWindow {
    slots: VecDeque<bool>,
    ones: usize,
}

impl AcrWindow {
    /// Creates a window of `window_size` slots, all zero.
    ///
    /// Panics if `window_size` is zero; configurations are validated before
    /// a window is built.
    pub fn new(window_size: usize) -> Self {
        assert!(window_size >= 1, "window size must be at least 1");
        let mut slots = VecDeque::with_capacity(window_size);
        slots.extend(core::iter::repeat_n(false, window_size));
        AcrWindow { slots, ones: 0 }
    }

    pub fn window_size(&self) -> usize {
        self.slots.len()
    }

    /// Current ratio of ones in the window.
    pub fn acr(&self) -> f64 {
        self.ones as f64 / self.slots.len() as f64
    }

    /// Dequeues the oldest contribution, enqueues the new one and returns the
    /// updated ratio.
    pub fn push(&mut self, autonomous: bool) -> f64 {
        let oldest = self.slots.pop_front().expect("window is never empty");
        if oldest {
            self.ones -= 1;
        }
        if autonomous {
            self.ones += 1;
        }
        self.slots.push_back(autonomous);
        self.acr()
    }

    /// Slots in FIFO order, oldest first.
    pub fn slots(&self) -> impl Iterator<Item = bool> + '_ {
        self.slots.iter().copied()
    }
}
