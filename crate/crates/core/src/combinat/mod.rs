//! Partitions and hook lengths, orbits on power sets and ordered set
//! partitions, and block systems of permutation groups.

mod blocksys;
mod concealed;
mod partition;
mod setpart;

pub use blocksys::{
    is_primitive, lemma24c_check, maximal_block_system, minimal_block, BlockSystem, Lemma24cReport,
};
pub use concealed::{is_p_concealed, subset_orbit_sizes, ConcealedReport, MAX_POINTS};
pub use partition::{hook_degree, lemma42_partition, Partition};
pub use setpart::{regular_orbit_on_partitions, OrderedSetPartition};
