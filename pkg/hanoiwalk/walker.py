#!/usr/bin/python
# -*- coding: utf-8 -*-

'''Coined quantum walker states and evolution operators

States are numpy arrays in vertex-major layout: amplitudes[k, a] for coin
port a at vertex k, with an extra leading ancilla axis (amplitudes[b, k, a])
for Tulsi's method. Each 4-entry coin block is contiguous so a coin is a
blocked 4x4 product and the shift is a fixed index permutation.

All operators act in place on the WalkerState they are given and return it.
No renormalization is ever performed.
'''

# Copyright © 2026 The Hanoiwalk developers
# Distributed under the GNU Lesser General Public License v3 (see LICENSE.txt)

from enum import Enum
import functools
import math

import numpy as np
import scipy.sparse as sparse

from hanoiwalk.errors import DomainError
import hanoiwalk.io.tables as tables
from hanoiwalk.topology import COIN_DIM, check_n, get_topology


def _check_epsilon(epsilon):
    try:
        ok = 0.0 < epsilon <= 2.0 and math.isfinite(epsilon)
    except TypeError:
        ok = False

    if not ok:
        raise DomainError('Coin parameter epsilon must be in (0, 2] for a real unitary coin ' \
            '(d - 2*epsilon >= 0 with d = 4); got {}'.format(epsilon))
    return float(epsilon)


def build_coin_vector(epsilon):
    '''Build the epsilon-weighted coin vector

    The level ports (0, 1) get weight epsilon/4 each and the backbone ports
    (2, 3) share the rest. epsilon = 1 gives the uniform coin state.

    epsilon (float)
        Coin parameter in (0, 2]

    Returns a unit norm numpy array of 4 floats.

    Raises DomainError if epsilon is out of range.
    '''
    epsilon = _check_epsilon(epsilon)
    lvl = math.sqrt(epsilon / 4.0)
    bb = math.sqrt((4.0 - 2.0 * epsilon) / 8.0)
    return np.array([lvl, lvl, bb, bb])


class CoinSpec(object):
    '''A real orthogonal 4x4 coin

    :ivar epsilon: The coin parameter

    :ivar matrix: The read-only coin matrix

    :ivar vector: The read-only coin vector v with matrix = 2*v*v^T - I
    '''
    def __init__(self, epsilon, matrix, vector):
        self.epsilon = epsilon
        self.matrix = matrix
        self.vector = vector
        self.matrix.flags.writeable = False
        self.vector.flags.writeable = False

    def __repr__(self):
        return 'CoinSpec({})'.format(self.epsilon)


@functools.lru_cache(maxsize=64)
def _cached_coin(epsilon):
    a = epsilon / 2.0
    b = math.sqrt(epsilon * (2.0 - epsilon)) / 2.0
    c = (2.0 - epsilon) / 2.0

    matrix = np.array([
        [a - 1.0, a,       b,       b],
        [a,       a - 1.0, b,       b],
        [b,       b,       c - 1.0, c],
        [b,       b,       c,       c - 1.0]
    ])

    return CoinSpec(epsilon, matrix, build_coin_vector(epsilon))


def epsilon_coin(epsilon):
    '''Build the epsilon-parameterized coin

    The {0,1} block carries epsilon/2, the {2,3} block (2 - epsilon)/2 and
    the cross blocks sqrt(epsilon*(2 - epsilon))/2, each diagonal reduced by
    one. epsilon = 1 is the Grover coin and epsilon = 2 decouples the level
    ports from the backbone ports.

    epsilon (float)
        Coin parameter in (0, 2]

    Returns a CoinSpec. Instances are shared between callers.

    Raises DomainError if epsilon is outside of (0, 2].
    '''
    return _cached_coin(_check_epsilon(epsilon))


def grover_coin():
    '''Returns the 4x4 Grover coin matrix 2|u><u| - I'''
    return np.full((COIN_DIM, COIN_DIM), 0.5) - np.eye(COIN_DIM)


class WalkerState(object):
    '''Amplitudes of a walker on an HN4 network

    :ivar n: Network size exponent

    :ivar has_ancilla: True when the state carries Tulsi's ancilla qubit

    :ivar amplitudes: complex array shaped (N, 4) or (2, N, 4) with an ancilla

    :ivar time: Number of evolution steps applied
    '''
    def __init__(self, n, has_ancilla=False, amplitudes=None, time=0):
        self.n = n
        self.N = 2 ** n
        self.has_ancilla = has_ancilla
        shape = (2, self.N, COIN_DIM) if has_ancilla else (self.N, COIN_DIM)

        if amplitudes is None:
            amplitudes = np.zeros(shape, dtype=complex)
        else:
            amplitudes = np.array(amplitudes, dtype=complex).reshape(shape)

        self.amplitudes = amplitudes
        self.time = time
        self._buf = np.empty_like(amplitudes) # Scratch for double buffering

    @property
    def flat(self):
        '''A flat view of the amplitudes'''
        return self.amplitudes.reshape(-1)

    def slices(self):
        '''Returns the (N, 4) coin-position slices (one per ancilla value)'''
        if self.has_ancilla:
            return [self.amplitudes[0], self.amplitudes[1]]
        return [self.amplitudes]

    def copy(self):
        return WalkerState(self.n, self.has_ancilla, self.amplitudes.copy(), self.time)

    def norm_sq(self):
        '''Returns the squared 2-norm of the state'''
        return float(np.vdot(self.flat, self.flat).real)

    def swap_buffer(self):
        self.amplitudes, self._buf = self._buf, self.amplitudes

    def __repr__(self):
        return 'WalkerState(n={}, ancilla={}, t={})'.format(self.n, self.has_ancilla, self.time)


def build_initial_state(epsilon, n, with_ancilla=False):
    '''Build the biased uniform initial state v(epsilon) (x) |u_P>

    epsilon (float)
        Coin parameter in (0, 2]. epsilon = 1 gives the uniform superposition
        over the whole coin-position space.

    n (int)
        Network size exponent

    with_ancilla (bool)
        Prepend Tulsi's ancilla qubit fixed to |1>

    Returns a new WalkerState at time 0.
    '''
    v = build_coin_vector(epsilon)
    topo_n = check_n(n)
    N = 2 ** topo_n

    state = WalkerState(topo_n, with_ancilla)
    block = np.broadcast_to(v / math.sqrt(N), (N, COIN_DIM))
    if with_ancilla:
        state.amplitudes[1] = block
    else:
        state.amplitudes[...] = block

    return state


def _check_vertex(k0, N):
    if not 0 <= k0 < N:
        raise DomainError('Marked vertex {} is outside of the network (N = {})'.format(k0, N))


def _coin_slice(psi, matrix, out):
    # psi[k, a] -> sum_b matrix[a, b] * psi[k, b]
    np.matmul(psi, matrix.T, out=out)


def _reflect_slice(psi, v, k0):
    blk = psi[k0]
    blk -= 2.0 * np.dot(v, blk) * v


def apply_coin(state, coin):
    '''Apply C (x) I: the coin matrix acts on every vertex's coin block

    state (WalkerState)
        The state to modify

    coin (CoinSpec)
        The coin to apply

    Returns the modified state.
    '''
    _coin_slice(state.amplitudes.reshape(-1, COIN_DIM), coin.matrix,
                state._buf.reshape(-1, COIN_DIM))
    state.swap_buffer()
    return state


def apply_shift(state, topo):
    '''Apply the shift operator S as an amplitude permutation

    state (WalkerState)
        The state to modify. With an ancilla both slices are shifted.

    topo (NetworkTopology)
        The network providing the port map

    Returns the modified state.
    '''
    if topo.N != state.N:
        raise DomainError('State size {} does not match network size {}'.format(state.N, topo.N))

    perm = topo.permutation
    for src, dst in zip(_flat_slices(state.amplitudes), _flat_slices(state._buf)):
        np.take(src, perm, out=dst, mode='clip')
    state.swap_buffer()
    return state


def _flat_slices(amps):
    if amps.ndim == 3:
        return [amps[0].reshape(-1), amps[1].reshape(-1)]
    return [amps.reshape(-1)]


def apply_marked_coin(state, coin, k0):
    '''Apply the search coin C': C at every vertex except k0, -I at k0

    state (WalkerState)
        The state to modify

    coin (CoinSpec)
        The coin for unmarked vertices

    k0 (int)
        The marked vertex

    Returns the modified state.
    '''
    _check_vertex(k0, state.N)
    for psi, out in zip(state.slices(), _slices(state._buf, state.has_ancilla)):
        _coin_slice(psi, coin.matrix, out)
        np.negative(psi[k0], out=out[k0])
    state.swap_buffer()
    return state


def _slices(amps, has_ancilla):
    return [amps[0], amps[1]] if has_ancilla else [amps]


def apply_reflection(state, epsilon, k0):
    '''Apply R_k0 = I - 2|v,k0><v,k0| with v the epsilon coin vector

    state (WalkerState)
        The state to modify

    epsilon (float or CoinSpec)
        The coin parameter selecting the reflection axis v(epsilon)

    k0 (int)
        The marked vertex

    Returns the modified state.
    '''
    _check_vertex(k0, state.N)
    v = epsilon.vector if isinstance(epsilon, CoinSpec) else build_coin_vector(epsilon)
    for psi in state.slices():
        _reflect_slice(psi, v, k0)
    return state


def _check_plain(state):
    if state.has_ancilla:
        raise DomainError('The search stepper needs a state without an ancilla')


def step_walk(state, coin, topo):
    '''One step of the unmarked walk U = S (C (x) I)'''
    _check_plain(state)
    _coin_slice(state.amplitudes, coin.matrix, state._buf)
    np.take(state._buf.reshape(-1), topo.permutation, out=state.amplitudes.reshape(-1), mode='clip')
    state.time += 1
    return state


def step_search(state, config, topo=None, coin=None):
    '''One step of the search operator U' = S C'(epsilon, k0)

    config (SearchConfig)
        Run configuration supplying n, epsilon, k0, and edge_mode

    topo (NetworkTopology or None)
        The network. Looked up from config when None.

    coin (CoinSpec or None)
        The coin. Built from config.epsilon when None.

    Returns the modified state with its time advanced by one.
    '''
    _check_plain(state)
    topo = get_topology(config.n, config.edge_mode) if topo is None else topo
    coin = epsilon_coin(config.epsilon) if coin is None else coin
    k0 = config.k0
    _check_vertex(k0, state.N)

    # Coin into the scratch buffer then shift back into place
    psi, buf = state.amplitudes, state._buf
    _coin_slice(psi, coin.matrix, buf)
    np.negative(psi[k0], out=buf[k0])
    np.take(buf.reshape(-1), topo.permutation, out=psi.reshape(-1), mode='clip')

    state.time += 1
    return state


class CosDeltaRule(Enum):
    '''How the Tulsi angle delta is chosen'''
    EXPLICIT = 'explicit'        # delta is given directly
    INV_LOG = 'inv_log'          # cos(delta) = c / log2(N)
    INV_SQRT_LOG = 'inv_sqrt_log' # cos(delta) = c / sqrt(log2(N))


class TulsiParams(object):
    '''Ancilla rotation parameters for Tulsi's method

    :ivar delta: Rotation angle in radians (EXPLICIT rule only)

    :ivar rule: CosDeltaRule for deriving delta from N

    :ivar c: Scale factor for the INV_LOG and INV_SQRT_LOG rules
    '''
    def __init__(self, delta=None, rule=CosDeltaRule.INV_LOG, c=1.0):
        self.rule = CosDeltaRule(rule)
        self.delta = delta
        self.c = c

        if self.rule == CosDeltaRule.EXPLICIT:
            if delta is None or not math.isfinite(delta):
                raise DomainError('An explicit Tulsi angle is required')
        elif not (c > 0.0 and math.isfinite(c)):
            raise DomainError('Tulsi scale c must be positive (got {})'.format(c))

    @classmethod
    def from_cos(cls, cos_delta):
        '''Create explicit parameters from a cos(delta) value in [0, 1]'''
        if not 0.0 <= cos_delta <= 1.0:
            raise DomainError('cos(delta) must be in [0, 1] (got {})'.format(cos_delta))
        return cls(math.acos(cos_delta), CosDeltaRule.EXPLICIT)

    def angles(self, N):
        '''Resolve (cos(delta), sin(delta)) for a network of N vertices'''
        if self.rule == CosDeltaRule.EXPLICIT:
            return math.cos(self.delta), math.sin(self.delta)

        log_n = math.log2(N)
        if self.rule == CosDeltaRule.INV_LOG:
            cos_d = min(1.0, self.c / log_n)
        else:
            cos_d = min(1.0, self.c / math.sqrt(log_n))

        return cos_d, math.sqrt(1.0 - cos_d * cos_d)

    def cos_delta(self, N):
        return self.angles(N)[0]

    def __repr__(self):
        if self.rule == CosDeltaRule.EXPLICIT:
            return 'TulsiParams(delta={})'.format(self.delta)
        return 'TulsiParams(rule={}, c={})'.format(self.rule.value, self.c)


def _rotate_ancilla(a0, a1, cos_d, sin_d, out0, out1):
    # (out0, out1) = [[c, s], [-s, c]] (a0, a1)
    np.multiply(a0, cos_d, out=out0)
    out0 += sin_d * a1
    np.multiply(a1, cos_d, out=out1)
    out1 -= sin_d * a0


def step_tulsi(state, config, params=None, topo=None, coin=None):
    '''One step of Tulsi's operator U''

    The sequence is X_delta on the ancilla, R_k0 controlled by ancilla |1>,
    X_delta^dagger, U controlled by ancilla |1>, and finally -Z on the ancilla.

    state (WalkerState)
        A state with an ancilla

    config (SearchConfig)
        Run configuration supplying n, epsilon, k0, edge_mode, and tulsi

    params (TulsiParams or None)
        Overrides config.tulsi when present

    Returns the modified state with its time advanced by one.
    '''
    if not state.has_ancilla:
        raise DomainError("Tulsi's stepper needs a state with an ancilla")

    topo = get_topology(config.n, config.edge_mode) if topo is None else topo
    coin = epsilon_coin(config.epsilon) if coin is None else coin
    params = config.tulsi if params is None else params
    k0 = config.k0
    _check_vertex(k0, state.N)

    cos_d, sin_d = params.angles(state.N)
    amps, buf = state.amplitudes, state._buf

    _rotate_ancilla(amps[0], amps[1], cos_d, sin_d, buf[0], buf[1])
    _reflect_slice(buf[1], coin.vector, k0)
    _rotate_ancilla(buf[0], buf[1], cos_d, -sin_d, amps[0], amps[1]) # X_delta^dagger

    _coin_slice(amps[1], coin.matrix, buf[1])
    np.take(buf[1].reshape(-1), topo.permutation, out=amps[1].reshape(-1), mode='clip')

    np.negative(amps[0], out=amps[0])

    state.time += 1
    return state


def position_distribution(state):
    '''Vertex probabilities with coin and ancilla summed out

    Returns a length N numpy array. Its sum equals the squared state norm.
    '''
    probs = np.abs(state.amplitudes) ** 2
    probs = probs.sum(axis=-1)
    if state.has_ancilla:
        probs = probs.sum(axis=0)
    return probs


def marked_probability(state, k0):
    '''Probability of measuring the walker at vertex k0

    All four coin ports (and the ancilla, if present) are summed out.

    state (WalkerState)
        The state to measure

    k0 (int)
        The vertex to measure

    Returns a float in [0, 1].
    '''
    _check_vertex(k0, state.N)
    blk = state.amplitudes[..., k0, :]
    return float(np.sum(blk.real ** 2 + blk.imag ** 2))


def norm_drift(state):
    '''Returns |norm**2 - 1| for a state'''
    return abs(state.norm_sq() - 1.0)


def dump_state(state, fname):
    '''Write all amplitudes of a state to a CSV file

    The columns are "ancilla,coin,vertex,re,im". States without an ancilla
    are written with ancilla = 0.
    '''
    tables.write_state(fname, state.amplitudes, state.has_ancilla)


class OperatorKind(Enum):
    '''Operators available from evolution_matrix()'''
    SHIFT = 'shift'
    COIN = 'coin'
    WALK = 'walk'
    SEARCH = 'search'
    TULSI = 'tulsi'


def evolution_matrix(topo, kind, epsilon=1.0, k0=3, tulsi=None):
    '''Build an explicit sparse matrix for one of the evolution operators

    The basis ordering matches the flattened WalkerState layout. This is meant
    for small networks and cross checking the in-place steppers.

    topo (NetworkTopology)
        The network

    kind (OperatorKind or string)
        SHIFT (S), COIN (C (x) I), WALK (U = S (C (x) I)), SEARCH (U' = U R_k0),
        or TULSI (U'' acting on the ancilla-extended space)

    epsilon (float)
        Coin parameter

    k0 (int)
        Marked vertex for SEARCH and TULSI

    tulsi (TulsiParams or None)
        Required for TULSI

    Returns a scipy.sparse CSR matrix.
    '''
    kind = OperatorKind(kind)
    N = topo.N
    dim = COIN_DIM * N
    coin = epsilon_coin(epsilon)

    perm = topo.permutation
    shift = sparse.csr_matrix((np.ones(dim), (perm, np.arange(dim))), shape=(dim, dim))
    if kind == OperatorKind.SHIFT:
        return shift

    coin_op = sparse.kron(sparse.identity(N), sparse.csr_matrix(coin.matrix), format='csr')
    if kind == OperatorKind.COIN:
        return coin_op

    walk = (shift @ coin_op).tocsr()
    if kind == OperatorKind.WALK:
        return walk

    _check_vertex(k0, N)
    axis = np.zeros(dim)
    axis[COIN_DIM * k0:COIN_DIM * (k0 + 1)] = coin.vector
    axis = sparse.csr_matrix(axis.reshape(-1, 1))
    refl = (sparse.identity(dim) - 2.0 * (axis @ axis.T)).tocsr()
    if kind == OperatorKind.SEARCH:
        return (walk @ refl).tocsr()

    if tulsi is None:
        raise DomainError("Tulsi parameters are required for Tulsi's operator")

    cos_d, sin_d = tulsi.angles(N)
    eye = sparse.identity(dim, format='csr')
    x_delta = sparse.kron(np.array([[cos_d, sin_d], [-sin_d, cos_d]]), eye)
    p0 = sparse.kron(np.diag([1.0, 0.0]), eye)
    p1 = np.diag([0.0, 1.0])

    c_refl = p0 + sparse.kron(p1, refl)
    c_walk = p0 + sparse.kron(p1, walk)
    minus_z = sparse.kron(np.diag([-1.0, 1.0]), eye)

    return (minus_z @ c_walk @ x_delta.T @ c_refl @ x_delta).tocsr()
