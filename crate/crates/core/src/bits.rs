//! Qubit-to-index bit convention shared by every module.
//!
//! Little-endian: qubit `q` (0-based) of a register is bit `q` of that
//! register's block index, so `x = sum_q 2^q * x_q`. One-based
//! labels `j` map to `q = j - 1`.

/// Value (0 or 1) of qubit `q` in basis index `index`.
#[inline]
pub const fn qubit_bit(index: usize, q: usize) -> usize {
    (index >> q) & 1
}

/// Sign `(-1)^{x_q}` used by single-Z Pauli strings.
#[inline]
pub fn z_sign(index: usize, q: usize) -> f64 {
    if qubit_bit(index, q) == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Extract the `width`-qubit register starting at qubit `offset` from a global index.
#[inline]
pub const fn register_value(index: usize, offset: usize, width: usize) -> usize {
    (index >> offset) & ((1usize << width) - 1)
}

/// `log2(n)` when `n` is a power of two.
pub fn exact_log2(n: usize) -> Option<usize> {
    if n.is_power_of_two() {
        Some(n.trailing_zeros() as usize)
    } else {
        None
    }
}
