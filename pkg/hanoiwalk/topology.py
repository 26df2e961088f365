#!/usr/bin/python
# -*- coding: utf-8 -*-

'''Degree-4 Hanoi network (HN4) construction

An HN4 with N = 2**n vertices is a cycle (the backbone) plus long range edges
inside each hierarchy level. Every vertex k >= 1 factors as k = 2**k1 * (2*k2 + 1)
where k1 is its level and k2 its position within the level.

The walker's coin has four ports per vertex. Ports 2 and 3 step along the
backbone. Ports 0 and 1 follow the level edges and are looped back onto the
same vertex at 0 and 2**(n-1). The port map is the graph action of the shift
operator: port_map(a, k) = (a', k') where S|a>|k> = |a'>|k'>.
'''

# Copyright © 2026 The Hanoiwalk developers
# Distributed under the GNU Lesser General Public License v3 (see LICENSE.txt)

from enum import Enum
import functools

import numpy as np

from hanoiwalk.errors import DomainError, NoFactorizationError


class EdgeMode(Enum):
    '''Interpretation of the in-level edges

    PAIRED links k2 even <-> k2 + 1 and both level ports follow the same edge.
    CHAIN links consecutive k2 values into a cycle within each level.
    '''
    PAIRED = 'paired'
    CHAIN = 'chain'


class EdgeClass(Enum):
    '''Classification of port edges'''
    BACKBONE = 'backbone'
    LEVEL = 'level'
    LOOP = 'loop'


COIN_DIM = 4

# Port assignments
LEVEL_PORTS = (0, 1)
BACKBONE_PORTS = (2, 3)


def check_n(n):
    '''Validate a network size exponent and return it as an int'''
    if isinstance(n, bool) or int(n) != n or n < 2:
        raise DomainError('Network size exponent must be an integer >= 2 (got {})'.format(n))
    return int(n)


class VertexLabel(object):
    '''Hierarchical label for a vertex

    :ivar k: Vertex index

    :ivar k1: Hierarchy level (None for vertex 0)

    :ivar k2: Position within the level (None for vertex 0)

    :ivar is_root: True for vertex 0 which is not covered by the factorization

    :ivar is_loop: True for the two vertices carrying a loop (0 and 2**(n-1))
    '''
    def __init__(self, k, k1, k2, is_root=False, is_loop=False):
        self.k = k
        self.k1 = k1
        self.k2 = k2
        self.is_root = is_root
        self.is_loop = is_loop

    def __repr__(self):
        return 'VertexLabel({}, {}, {})'.format(self.k, self.k1, self.k2)

    def __eq__(self, other):
        return (self.k, self.k1, self.k2, self.is_root, self.is_loop) == \
            (other.k, other.k1, other.k2, other.is_root, other.is_loop)

    def __ne__(self, other):
        return not self == other

    def __iter__(self):
        # Allows "k1, k2 = factorize(k, n)"
        return iter((self.k1, self.k2))


def level_size(k1, n):
    '''Number of vertices in hierarchy level k1 of an HN4 with 2**n vertices'''
    return 2 ** (n - k1 - 1)


def level_sizes(n):
    '''Sizes of all hierarchy levels

    n (int)
        Network size exponent (N = 2**n)

    Returns a list of level sizes for k1 = 0 .. n-1. The sizes sum to N - 1.
    '''
    n = check_n(n)
    return [level_size(k1, n) for k1 in range(n)]


def factorize(k, n):
    '''Decompose a vertex index into its hierarchy level and in-level position

    k (int)
        Vertex index in the range 1 .. 2**n - 1

    n (int)
        Network size exponent

    Returns a VertexLabel with k == 2**k1 * (2*k2 + 1).

    Raises NoFactorizationError for k = 0.
    Raises DomainError if k is outside of the network.
    '''
    n = check_n(n)
    if k == 0:
        raise NoFactorizationError()
    if k < 0 or k >= 2 ** n:
        raise DomainError('Vertex {} is outside of the network (N = {})'.format(k, 2 ** n))

    k = int(k)
    k1 = (k & -k).bit_length() - 1 # Count trailing zeros
    k2 = k >> (k1 + 1)
    return VertexLabel(k, k1, k2, is_loop=(k1 == n - 1))


def compose(k1, k2, n):
    '''Build a vertex index from its hierarchy level and in-level position

    k1 (int)
        Hierarchy level, 0 .. n-1

    k2 (int)
        Position within the level, 0 .. 2**(n-k1-1) - 1

    n (int)
        Network size exponent

    Returns the vertex index 2**k1 * (2*k2 + 1).

    Raises DomainError if (k1, k2) is not a valid label.
    '''
    n = check_n(n)
    if not 0 <= k1 <= n - 1:
        raise DomainError('Level {} is outside of 0 .. {}'.format(k1, n - 1))
    if not 0 <= k2 < level_size(k1, n):
        raise DomainError('Level index {} is outside of 0 .. {} for level {}'.format(k2,
            level_size(k1, n) - 1, k1))

    return (2 ** k1) * (2 * k2 + 1)


def vertex_label(k, n):
    '''Label any vertex including the special root vertex 0

    k (int)
        Vertex index in the range 0 .. 2**n - 1

    n (int)
        Network size exponent

    Returns a VertexLabel. Vertex 0 has k1 = k2 = None and is flagged as the loop root.
    '''
    if k == 0:
        check_n(n)
        return VertexLabel(0, None, None, is_root=True, is_loop=True)

    return factorize(k, n)


class NetworkTopology(object):
    '''Immutable HN4 port map

    The map is held in two read-only (4, N) integer arrays: target_port[a, k]
    and target_vertex[a, k] give the port and vertex reached by S from |a>|k>.
    '''
    def __init__(self, n, edge_mode=EdgeMode.PAIRED):
        '''
        n (int)
            Network size exponent. The network has N = 2**n vertices.

        edge_mode (EdgeMode or string)
            Interpretation of the level edges

        Raises DomainError if n < 2.
        '''
        self.n = check_n(n)
        self.N = 2 ** self.n
        self.edge_mode = EdgeMode(edge_mode)

        self.target_port, self.target_vertex = self._build_port_map()
        self.target_port.flags.writeable = False
        self.target_vertex.flags.writeable = False

        self._permutation = None


    def _build_port_map(self):
        n, N = self.n, self.N
        ks = np.arange(N, dtype=np.int64)

        t_port = np.empty((COIN_DIM, N), dtype=np.int64)
        t_vert = np.empty((COIN_DIM, N), dtype=np.int64)

        # Backbone cycle
        t_port[2] = 3
        t_vert[2] = (ks + 1) % N
        t_port[3] = 2
        t_vert[3] = (ks - 1) % N

        # Level edges always flip 0 <-> 1
        t_port[0] = 1
        t_port[1] = 0

        # Loop vertices 0 and 2**(n-1) are fixed under ports 0 and 1
        t_vert[0] = ks
        t_vert[1] = ks

        kv = ks[1:]
        low = kv & -kv
        k1 = np.log2(low).astype(np.int64) # low is an exact power of 2
        k2 = kv >> (k1 + 1)
        lsize = np.left_shift(1, n - k1 - 1)

        leveled = lsize > 1 # Excludes 2**(n-1)
        kv, k1, k2, lsize = kv[leveled], k1[leveled], k2[leveled], lsize[leveled]

        if self.edge_mode == EdgeMode.PAIRED:
            # k2 even -> k2 + 1, k2 odd -> k2 - 1 on both ports
            partner = k2 ^ 1
            t_vert[0, kv] = (2 ** k1) * (2 * partner + 1)
            t_vert[1, kv] = t_vert[0, kv]
        else:
            up = (k2 + 1) % lsize
            down = (k2 - 1) % lsize
            t_vert[0, kv] = (2 ** k1) * (2 * up + 1)
            t_vert[1, kv] = (2 ** k1) * (2 * down + 1)

        return t_port, t_vert


    def shift_target(self, port, k):
        '''Find where the shift operator sends a coin-position basis state

        port (int)
            Coin port 0 .. 3

        k (int)
            Vertex 0 .. N-1

        Returns a (port, vertex) pair.

        Raises DomainError for an invalid port or vertex.
        '''
        if port not in (0, 1, 2, 3):
            raise DomainError('Invalid coin port {}'.format(port))
        if not 0 <= k < self.N:
            raise DomainError('Vertex {} is outside of the network (N = {})'.format(k, self.N))

        return int(self.target_port[port, k]), int(self.target_vertex[port, k])


    def neighbors(self, k):
        '''Returns the vertices reached from k through ports 0 .. 3'''
        return tuple(int(v) for v in self.target_vertex[:, k])


    @property
    def permutation(self):
        '''Flat amplitude permutation for the vertex-major layout

        Amplitude index i = 4*k + a is moved to permutation[i]. Because S is an
        involution the array is its own inverse.
        '''
        if self._permutation is None:
            perm = (COIN_DIM * self.target_vertex + self.target_port).T.reshape(-1)
            perm.flags.writeable = False
            self._permutation = perm

        return self._permutation


    def __repr__(self):
        return 'NetworkTopology({}, {})'.format(self.n, self.edge_mode)


@functools.lru_cache(maxsize=32)
def _cached_topology(n, edge_mode):
    return NetworkTopology(n, edge_mode)


def get_topology(n, edge_mode=EdgeMode.PAIRED):
    '''Get a shared NetworkTopology instance

    Topologies are immutable so a single instance per (n, edge_mode) is reused
    across runs in the same process.
    '''
    return _cached_topology(check_n(n), EdgeMode(edge_mode))


def shift_target(port, k, topo):
    '''Functional form of NetworkTopology.shift_target()'''
    return topo.shift_target(port, k)


def _edge_class(port, k, k_prime):
    if port in BACKBONE_PORTS:
        return EdgeClass.BACKBONE
    return EdgeClass.LOOP if k == k_prime else EdgeClass.LEVEL


def port_edges(topo):
    '''Enumerate the undirected port edges of a network

    Each orbit {(a, k), (a', k')} of the port map is one edge. A level edge
    traversed by both port 0 and port 1 (PAIRED mode) therefore appears twice.

    topo (NetworkTopology)
        The network to enumerate

    Yields (k, k_prime, EdgeClass, port, port_prime) tuples with k <= k_prime.
    '''
    for k in range(topo.N):
        for a in range(COIN_DIM):
            a2, k2 = topo.shift_target(a, k)
            if (k, a) > (k2, a2): # Already reported from the other end
                continue
            if k <= k2:
                yield (k, k2, _edge_class(a, k, k2), a, a2)
            else:
                yield (k2, k, _edge_class(a, k, k2), a2, a)


def dump_edges(topo):
    '''Build the deduplicated edge list of a network

    topo (NetworkTopology)
        The network to export

    Returns a list of (k, k_prime, EdgeClass) tuples sorted by vertex pair.
      Every vertex has a total port degree of 4: a loop contributes 2 ports
      and every other edge one port to each end.
    '''
    order = {EdgeClass.BACKBONE: 0, EdgeClass.LEVEL: 1, EdgeClass.LOOP: 2}
    edges = [(k, kp, cls) for k, kp, cls, _, _ in port_edges(topo)]
    edges.sort(key=lambda e: (e[0], e[1], order[e[2]]))
    return edges


def to_graph(topo):
    '''Convert a network into a networkx MultiGraph

    Every port edge becomes a graph edge with a "cls" attribute holding the
    EdgeClass value string.
    '''
    import networkx as nx

    g = nx.MultiGraph(n=topo.n, edge_mode=topo.edge_mode.value)
    g.add_nodes_from(range(topo.N))
    for k, kp, cls, _, _ in port_edges(topo):
        g.add_edge(k, kp, cls=cls.value)

    return g


def distance_stats(topo):
    '''Compute the diameter and mean shortest path length of a network

    Loops and parallel edges are collapsed so distances are in hops on the
    simple graph.

    topo (NetworkTopology)
        The network to analyze

    Returns a (diameter, mean distance) pair.
    '''
    import networkx as nx

    g = nx.Graph(to_graph(topo))
    g.remove_edges_from(list(nx.selfloop_edges(g)))

    return nx.diameter(g), nx.average_shortest_path_length(g)
