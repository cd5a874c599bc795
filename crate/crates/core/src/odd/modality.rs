//! Peak counting on coefficient sequences.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModalityLabel {
    Unimodal,
    Bimodal,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Modality {
    pub peaks: usize,
    /// Length of each peak run, left to right.
    pub plateau_widths: Vec<usize>,
    /// Index of the first element of each peak run.
    pub peak_starts: Vec<usize>,
    pub label: ModalityLabel,
}

/// Counts peaks, where a peak is a maximal run of equal values strictly
/// greater than its neighbouring runs. Runs at either end only compare
/// against the one neighbour they have.
pub fn classify_modality<T: PartialOrd>(seq: &[T]) -> Result<Modality> {
    if seq.is_empty() {
        return Err(Error::EmptySequence);
    }
    // (start, width) of each maximal constant run
    let mut runs: Vec<(usize, usize)> = Vec::new();
    for (i, v) in seq.iter().enumerate() {
        match runs.last_mut() {
            Some((start, width)) if seq[*start] == *v => *width += 1,
            _ => runs.push((i, 1)),
        }
    }
    let mut plateau_widths = Vec::new();
    let mut peak_starts = Vec::new();
    for (r, &(start, width)) in runs.iter().enumerate() {
        let v = &seq[start];
        let above_left = r == 0 || *v > seq[runs[r - 1].0];
        let above_right = r + 1 == runs.len() || *v > seq[runs[r + 1].0];
        if above_left && above_right {
            plateau_widths.push(width);
            peak_starts.push(start);
        }
    }
    let peaks = peak_starts.len();
    let label = match peaks {
        1 => ModalityLabel::Unimodal,
        2 => ModalityLabel::Bimodal,
        _ => ModalityLabel::Other,
    };
    Ok(Modality { peaks, plateau_widths, peak_starts, label })
}
