"""Self-complementary graph toolkit: antimorphisms, enumeration, P4 partitions and structure checks."""

from scgraph.antimorphism import (find_antimorphism, find_antimorphism_of_type, find_power_of_two_antimorphism,
                                  is_antimorphism, is_self_complementary)
from scgraph.canon import are_isomorphic, canonical_form
from scgraph.constructions import enumerate_sc_graphs, j_construction, p4_construction
from scgraph.graph import Graph, complement, induced_subgraph, is_induced_p4
from scgraph.graph6 import parse_graph6, write_graph6
from scgraph.p4partition import lemma_base, lemma_gibbs, p4_partition, verify_p4_partition, zmod_pair_partition
from scgraph.partitions import SkewPartition, SymmetricPartition, verify_skew_partition, verify_symmetric_partition
from scgraph.permutation import Permutation, cycle_decomposition
from scgraph.report import StructureReport, conjecture_check
from scgraph.structure import (akiyama_harary_check, find_induced_c5, find_skew_partition, find_symmetric_partition,
                               symmetric_to_2join_shape, theorem_m_decompose)

__version__ = '0.1.0'
