//! Inputs shared by the ring benchmarks.

use schubert_core::{BoxedPartition, PartitionBox, SchubertClass};

/// Every basis class of the given weight in `G(d, P^n)`.
pub fn basis_of_weight(d: u32, n: u32, weight: u32) -> Vec<SchubertClass> {
    let frame = PartitionBox::grassmannian(d, n).expect("valid Grassmannian");
    frame
        .partitions(Some(weight))
        .into_iter()
        .map(SchubertClass::basis)
        .collect()
}

/// The staircase `(k, k-1, ..., 1)` clipped to the box.
pub fn staircase(frame: PartitionBox) -> BoxedPartition {
    let k = frame.width().min(frame.rows() as u32);
    let parts: Vec<u32> = (1..=k).rev().collect();
    BoxedPartition::new(frame, &parts).expect("staircase fits")
}
