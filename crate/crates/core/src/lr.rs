//! Littlewood-Richardson coefficients by brute-force tableau counting.
//!
//! This is the reference the Giambelli/Pieri product is tested against, so it
//! shares nothing with [`crate::schubert::multiply`] beyond the class types.

use num_bigint::BigInt;

use crate::partitions::{BoxedPartition, PartitionError};
use crate::schubert::{SchubertClass, SchubertError};

/// `σ_λ · σ_μ` as `Σ_ν c^ν_{λμ} σ_ν`, summing over `ν` in the box.
pub fn lr_oracle(lambda: &BoxedPartition, mu: &BoxedPartition) -> Result<SchubertClass, SchubertError> {
    let frame = lambda.frame();
    if frame != mu.frame() {
        return Err(SchubertError::Partition(PartitionError::BoxMismatch(
            frame,
            mu.frame(),
        )));
    }
    let total = lambda.weight() + mu.weight();
    let mut out = SchubertClass::zero(frame);
    if total > frame.cells() {
        return Ok(out);
    }
    for nu in frame.partitions(Some(total)) {
        if !lambda.leq(&nu)? {
            continue;
        }
        let n = count_lr_tableaux(lambda.parts(), nu.parts(), mu.parts());
        if n > 0 {
            out.add_term(nu, BigInt::from(n))?;
        }
    }
    Ok(out)
}

/// Number of semistandard fillings of `outer/inner` with content `content`
/// whose reverse reading word (rows top to bottom, each right to left) is a
/// lattice word.
pub fn count_lr_tableaux(inner: &[u32], outer: &[u32], content: &[u32]) -> u64 {
    let rows = outer.len();
    let cells: Vec<(usize, usize)> = (0..rows)
        .flat_map(|r| {
            let lo = inner.get(r).copied().unwrap_or(0) as usize;
            let hi = outer[r] as usize;
            (lo..hi).rev().map(move |c| (r, c))
        })
        .collect();
    let content: Vec<u32> = content.iter().copied().filter(|&c| c > 0).collect();
    if cells.len() != content.iter().sum::<u32>() as usize {
        return 0;
    }
    let width = outer.first().copied().unwrap_or(0) as usize;
    let mut grid = vec![vec![None::<usize>; width]; rows];
    let mut used = vec![0u32; content.len()];
    fill(&cells, 0, &mut grid, &mut used, &content)
}

fn fill(
    cells: &[(usize, usize)],
    at: usize,
    grid: &mut [Vec<Option<usize>>],
    used: &mut [u32],
    content: &[u32],
) -> u64 {
    let Some(&(r, c)) = cells.get(at) else {
        return 1;
    };
    // right neighbour already filled (reading goes right to left)
    let max = grid[r].get(c + 1).copied().flatten().unwrap_or(usize::MAX);
    // value above must be strictly smaller
    let min = if r > 0 {
        grid[r - 1][c].map_or(0, |v| v + 1)
    } else {
        0
    };
    let mut total = 0;
    for v in min..content.len().min(max.saturating_add(1)) {
        if used[v] == content[v] {
            continue;
        }
        if v > 0 && used[v] + 1 > used[v - 1] {
            continue;
        }
        used[v] += 1;
        grid[r][c] = Some(v);
        total += fill(cells, at + 1, grid, used, content);
        grid[r][c] = None;
        used[v] -= 1;
    }
    total
}
