use super::GroverError;

/// Largest dimension the reference simulator accepts.
pub const STATEVECTOR_MAX_DIM: usize = 1 << 16;

/// Marked probability mass after `j` explicit Grover iterations on an
/// `n`-dimensional real amplitude vector started uniform. Each iteration
/// flips the sign of marked amplitudes, then reflects every amplitude about
/// the mean.
pub fn statevector_success_prob(n: usize, marked: &[usize], j: u64) -> Result<f64, GroverError> {
    if n == 0 {
        return Err(GroverError::EmptySpace);
    }
    if n > STATEVECTOR_MAX_DIM {
        return Err(GroverError::DimensionTooLarge(n));
    }
    let mut is_marked = vec![false; n];
    for &i in marked {
        if i >= n {
            return Err(GroverError::CountTooLarge { t: i + 1, n });
        }
        is_marked[i] = true;
    }
    let mut amp = vec![1.0 / (n as f64).sqrt(); n];
    for _ in 0..j {
        for (a, &m) in amp.iter_mut().zip(&is_marked) {
            if m {
                *a = -*a;
            }
        }
        let mean = amp.iter().sum::<f64>() / n as f64;
        for a in &mut amp {
            *a = 2.0 * mean - *a;
        }
    }
    let mass: f64 = amp
        .iter()
        .zip(&is_marked)
        .filter(|(_, &m)| m)
        .map(|(a, _)| a * a)
        .sum();
    Ok(mass.clamp(0.0, 1.0))
}
