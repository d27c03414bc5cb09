//! Country-level collaboration and mobility networks.
//!
//! Structural measures and centralities run on the unweighted presence graph
//! (an edge exists when its weight is at least 1); weights feed the flow
//! reports only. Distances are hop counts.

mod graph;
mod metrics;
mod pair_map;
mod regional;

pub use graph::{
    build_coauthorship_network, build_mobility_network, mobility_network_from, read_edge_list,
    write_edge_list, CountryGraph,
};
pub use metrics::{
    assortativity, average_degree, centrality_table, closeness_centrality, clustering_coefficient,
    degree_centrality, density, density_from_counts, diameter, structural_measures, Closeness,
    Diameter, NodeCentrality, StructuralMeasures,
};
pub use regional::{regional_flow_matrix, RegionShare, RegionalFlowMatrix};
