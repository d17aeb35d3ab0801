//! Heap instrumentation for measuring the additional space an algorithm
//! requests.
//!
//! Register [`CountingAllocator`] as the global allocator of a binary, then
//! bracket the computation with an [`AllocProbe`]:
//!
//! ```ignore
//! #[global_allocator]
//! static ALLOC: trilist::alloc::CountingAllocator = trilist::alloc::CountingAllocator;
//!
//! let probe = AllocProbe::start();
//! let count = trilist::sparse::new_listing(&g, k).count();
//! let extra = probe.peak_bytes();
//! ```
//!
//! Counters are per thread, so concurrent threads do not disturb a probe.

use std::alloc::{GlobalAlloc, Layout, System};
use std::cell::Cell;
use std::sync::atomic::{AtomicBool, Ordering};

static ACTIVE: AtomicBool = AtomicBool::new(false);

thread_local! {
    static LIVE: Cell<i64> = const { Cell::new(0) };
    static PEAK: Cell<i64> = const { Cell::new(0) };
}

/// [`System`] wrapper that tracks live and peak heap bytes per thread.
pub struct CountingAllocator;

#[inline]
fn grow(bytes: usize) {
    ACTIVE.store(true, Ordering::Relaxed);
    let _ = LIVE.try_with(|live| {
        let now = live.get() + bytes as i64;
        live.set(now);
        let _ = PEAK.try_with(|peak| {
            if now > peak.get() {
                peak.set(now);
            }
        });
    });
}

#[inline]
fn shrink(bytes: usize) {
    let _ = LIVE.try_with(|live| live.set(live.get() - bytes as i64));
}

unsafe impl GlobalAlloc for CountingAllocator {
    unsafe fn alloc(&self, layout: Layout) -> *mut u8 {
        let p = unsafe { System.alloc(layout) };
        if !p.is_null() {
            grow(layout.size());
        }
        p
    }

    unsafe fn alloc_zeroed(&self, layout: Layout) -> *mut u8 {
        let p = unsafe { System.alloc_zeroed(layout) };
        if !p.is_null() {
            grow(layout.size());
        }
        p
    }

    unsafe fn dealloc(&self, ptr: *mut u8, layout: Layout) {
        unsafe { System.dealloc(ptr, layout) };
        shrink(layout.size());
    }

    unsafe fn realloc(&self, ptr: *mut u8, layout: Layout, new_size: usize) -> *mut u8 {
        let p = unsafe { System.realloc(ptr, layout, new_size) };
        if !p.is_null() {
            // Counted as a fresh block before the old one goes: a moving
            // realloc holds both for a moment.
            grow(new_size);
            shrink(layout.size());
        }
        p
    }
}

/// Whether [`CountingAllocator`] is installed and has seen traffic.
pub fn is_active() -> bool {
    ACTIVE.load(Ordering::Relaxed)
}

/// Peak heap growth on the current thread since [`AllocProbe::start`].
#[derive(Debug)]
pub struct AllocProbe {
    baseline: i64,
}

impl AllocProbe {
    pub fn start() -> Self {
        let baseline = LIVE.with(Cell::get);
        PEAK.with(|p| p.set(baseline));
        AllocProbe { baseline }
    }

    /// Largest number of bytes simultaneously held above the baseline.
    pub fn peak_bytes(&self) -> u64 {
        (PEAK.with(Cell::get) - self.baseline).max(0) as u64
    }

    /// Bytes currently held above the baseline.
    pub fn live_bytes(&self) -> i64 {
        LIVE.with(Cell::get) - self.baseline
    }
}
