"""The placement policy: embedding + LSTM + shared masked output head.

Actions are drawn autoregressively, three per overlay (horizontal start,
vertical start, transparency); the previous action index is embedded and fed
back in, starting from index 0 with a zero hidden state. One output layer of
width max_vocab serves every step, with indices beyond the step's vocabulary
masked to -inf before the softmax. Training is plain score-function policy
gradient ascended with Adam; gradients are backpropagated through time along
the recorded action path, treating the sampled actions as constants.

Everything is float64 numpy. No framework, no GPU: the policy is tiny (hidden
size 30) and the oracle dominates the runtime anyway.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass, field

import numpy as np

HIDDEN_SIZE = 30
EMBED_SIZE = 30
INIT_SCALE = 0.08
ALPHA_MIN = 127
ALPHA_CHOICES = 129  # transparency bytes 127..255


class GradientError(ArithmeticError):
    """A policy-gradient update produced non-finite values."""


@dataclass(frozen=True)
class ActionSpace:
    """Per-step categorical vocabularies with affine decode tables.

    The decoded value of action index a at step t is offsets[t] + a, which
    ranges over exactly the legal values for that coordinate.
    """

    sizes: tuple[int, ...]
    offsets: tuple[int, ...]

    def __post_init__(self):
        if len(self.sizes) != len(self.offsets):
            raise ValueError("sizes and offsets must align")
        if not self.sizes:
            raise ValueError("action space needs at least one step")
        if any(s < 1 for s in self.sizes):
            raise ValueError(f"vocabulary sizes must be >= 1: {self.sizes}")

    @property
    def steps(self) -> int:
        return len(self.sizes)

    @property
    def max_vocab(self) -> int:
        return max(self.sizes)

    def decode(self, actions) -> tuple[int, ...]:
        if len(actions) != self.steps:
            raise ValueError(f"{len(actions)} actions for {self.steps} steps")
        for t, a in enumerate(actions):
            if not 0 <= a < self.sizes[t]:
                raise ValueError(f"action {a} outside step-{t} vocabulary {self.sizes[t]}")
        return tuple(off + int(a) for off, a in zip(self.offsets, actions))

    @classmethod
    def for_placements(
        cls, glyph_widths: list[int], frame_h: int, frame_w: int, font_h: int
    ) -> "ActionSpace":
        """Three steps per overlay: u in [-w_k, W], v in [0, H-h], alpha in [127, 255]."""
        if font_h > frame_h:
            raise ValueError(f"font size {font_h} exceeds frame height {frame_h}")
        sizes, offsets = [], []
        for w in glyph_widths:
            sizes += [frame_w + w + 1, frame_h - font_h + 1, ALPHA_CHOICES]
            offsets += [-w, 0, ALPHA_MIN]
        return cls(sizes=tuple(sizes), offsets=tuple(offsets))


@dataclass
class AgentParams:
    """Weights of the policy. Gate rows are stacked [input, forget, cell, output]."""

    embed: np.ndarray  # (max_vocab, E)
    w_x: np.ndarray  # (4*Hd, E)
    w_h: np.ndarray  # (4*Hd, Hd)
    bias: np.ndarray  # (4*Hd,)
    w_out: np.ndarray  # (max_vocab, Hd), bias-free

    @property
    def hidden_size(self) -> int:
        return self.w_h.shape[1]

    @property
    def embed_size(self) -> int:
        return self.embed.shape[1]

    def arrays(self) -> list[np.ndarray]:
        return [self.embed, self.w_x, self.w_h, self.bias, self.w_out]

    def copy(self) -> "AgentParams":
        return AgentParams(*[a.copy() for a in self.arrays()])


@dataclass(frozen=True)
class ActionSequence:
    """One sampled rollout: action indices, their log-probs, and the joint log P."""

    actions: tuple[int, ...]
    step_log_probs: tuple[float, ...]
    log_prob: float


def init_agent(
    space: ActionSpace,
    seed: int,
    hidden_size: int = HIDDEN_SIZE,
    embed_size: int = EMBED_SIZE,
) -> AgentParams:
    """Fresh parameters, uniform in [-0.08, 0.08] from the seeded generator."""
    rng = np.random.default_rng(seed)
    v = space.max_vocab

    def u(*shape):
        return rng.uniform(-INIT_SCALE, INIT_SCALE, size=shape)

    return AgentParams(
        embed=u(v, embed_size),
        w_x=u(4 * hidden_size, embed_size),
        w_h=u(4 * hidden_size, hidden_size),
        bias=u(4 * hidden_size),
        w_out=u(v, hidden_size),
    )


def _sigmoid(z):
    return 1.0 / (1.0 + np.exp(-z))


def _lstm_step(params: AgentParams, x, h, c):
    hd = params.hidden_size
    z = x @ params.w_x.T + h @ params.w_h.T + params.bias
    i = _sigmoid(z[:, :hd])
    f = _sigmoid(z[:, hd : 2 * hd])
    g = np.tanh(z[:, 2 * hd : 3 * hd])
    o = _sigmoid(z[:, 3 * hd :])
    c_new = f * c + i * g
    h_new = o * np.tanh(c_new)
    return h_new, c_new, (i, f, g, o)


def _step_log_probs(params: AgentParams, h, size: int):
    """Log-softmax over the step's legal vocabulary; illegal tail is -inf."""
    logits = h @ params.w_out.T
    legal = logits[:, :size]
    zmax = legal.max(axis=1, keepdims=True)
    lse = zmax + np.log(np.exp(legal - zmax).sum(axis=1, keepdims=True))
    out = np.full_like(logits, -np.inf)
    out[:, :size] = legal - lse
    return out


def sample_batch(
    params: AgentParams, space: ActionSpace, batch_size: int, rng: np.random.Generator
) -> list[ActionSequence]:
    """Draw batch_size independent rollouts from the current policy.

    Rollouts start from a zero hidden state and action index 0; draws happen
    in fixed step order from the single generator, so results are
    reproducible regardless of how callers parallelize downstream work.
    """
    if batch_size < 1:
        raise ValueError(f"batch size must be >= 1, got {batch_size}")
    b = batch_size
    hd = params.hidden_size
    prev = np.zeros(b, dtype=np.int64)
    h = np.zeros((b, hd))
    c = np.zeros((b, hd))
    actions = np.empty((b, space.steps), dtype=np.int64)
    logps = np.empty((b, space.steps))
    for t, size in enumerate(space.sizes):
        h, c, _ = _lstm_step(params, params.embed[prev], h, c)
        logp = _step_log_probs(params, h, size)
        p = np.exp(logp[:, :size])
        cdf = np.cumsum(p, axis=1)
        cdf[:, -1] = 1.0
        draw = rng.random(b)
        a = np.minimum((draw[:, None] >= cdf).sum(axis=1), size - 1)
        actions[:, t] = a
        logps[:, t] = logp[np.arange(b), a]
        prev = a
    return [
        ActionSequence(
            actions=tuple(int(a) for a in actions[n]),
            step_log_probs=tuple(float(x) for x in logps[n]),
            log_prob=float(logps[n].sum()),
        )
        for n in range(b)
    ]


def sequence_log_probs(
    params: AgentParams, space: ActionSpace, actions: np.ndarray
) -> np.ndarray:
    """Replay recorded actions through the policy; returns per-step log-probs (B, S)."""
    actions = np.asarray(actions, dtype=np.int64)
    if actions.ndim == 1:
        actions = actions[None, :]
    b = actions.shape[0]
    h = np.zeros((b, params.hidden_size))
    c = np.zeros_like(h)
    prev = np.zeros(b, dtype=np.int64)
    out = np.empty((b, space.steps))
    for t, size in enumerate(space.sizes):
        h, c, _ = _lstm_step(params, params.embed[prev], h, c)
        logp = _step_log_probs(params, h, size)
        out[:, t] = logp[np.arange(b), actions[:, t]]
        prev = actions[:, t]
    return out


def policy_gradient(
    params: AgentParams, space: ActionSpace, actions: np.ndarray, coefs: np.ndarray
) -> list[np.ndarray]:
    """Gradient of sum_n coefs[n] * log P(actions[n]) w.r.t. every parameter.

    Forward replays the recorded paths caching gates and states, then
    backpropagates through time. Sampled actions are constants; only the
    log-prob of what was actually drawn carries gradient.
    """
    actions = np.asarray(actions, dtype=np.int64)
    coefs = np.asarray(coefs, dtype=np.float64)
    b, steps = actions.shape
    hd = params.hidden_size
    h = np.zeros((b, hd))
    c = np.zeros((b, hd))
    prev = np.zeros(b, dtype=np.int64)
    cache = []
    for t, size in enumerate(space.sizes):
        x = params.embed[prev]
        h_prev, c_prev = h, c
        h, c, gates = _lstm_step(params, x, h, c)
        logp = _step_log_probs(params, h, size)
        cache.append((prev, x, h_prev, c_prev, h, c, gates, np.exp(logp[:, :size])))
        prev = actions[:, t]

    d_embed = np.zeros_like(params.embed)
    d_wx = np.zeros_like(params.w_x)
    d_wh = np.zeros_like(params.w_h)
    d_b = np.zeros_like(params.bias)
    d_wout = np.zeros_like(params.w_out)
    dh_next = np.zeros((b, hd))
    dc_next = np.zeros((b, hd))
    rows = np.arange(b)
    for t in range(steps - 1, -1, -1):
        prev_idx, x, h_prev, c_prev, h_t, c_t, (i, f, g, o), probs = cache[t]
        size = space.sizes[t]
        dlogits = np.zeros((b, params.w_out.shape[0]))
        dlogits[:, :size] = -probs * coefs[:, None]
        dlogits[rows, actions[:, t]] += coefs
        d_wout += dlogits.T @ h_t
        dh = dh_next + dlogits @ params.w_out
        tanh_c = np.tanh(c_t)
        do = dh * tanh_c
        dc = dc_next + dh * o * (1.0 - tanh_c**2)
        di = dc * g
        df = dc * c_prev
        dg = dc * i
        dz = np.concatenate(
            [di * i * (1 - i), df * f * (1 - f), dg * (1 - g**2), do * o * (1 - o)],
            axis=1,
        )
        d_wx += dz.T @ x
        d_wh += dz.T @ h_prev
        d_b += dz.sum(axis=0)
        dh_next = dz @ params.w_h
        dc_next = dc * f
        np.add.at(d_embed, prev_idx, dz @ params.w_x)
    return [d_embed, d_wx, d_wh, d_b, d_wout]


@dataclass
class AdamState:
    """Bias-corrected Adam moments for a fixed list of parameter arrays."""

    lr: float = 0.03
    beta1: float = 0.9
    beta2: float = 0.999
    eps: float = 1e-8
    step: int = 0
    m: list[np.ndarray] = field(default_factory=list)
    v: list[np.ndarray] = field(default_factory=list)

    def _ensure(self, arrays):
        if not self.m:
            self.m = [np.zeros_like(a) for a in arrays]
            self.v = [np.zeros_like(a) for a in arrays]


def adam_update(state: AdamState, params: list[np.ndarray], grads: list[np.ndarray]) -> None:
    """One Adam ascent step, in place: params move toward higher objective."""
    state._ensure(params)
    state.step += 1
    bc1 = 1.0 - state.beta1**state.step
    bc2 = 1.0 - state.beta2**state.step
    for p, g, m, v in zip(params, grads, state.m, state.v):
        m *= state.beta1
        m += (1.0 - state.beta1) * g
        v *= state.beta2
        v += (1.0 - state.beta2) * g * g
        p += state.lr * (m / bc1) / (np.sqrt(v / bc2) + state.eps)


def reinforce_step(
    params: AgentParams,
    opt: AdamState,
    space: ActionSpace,
    batch: list[tuple[ActionSequence, float]],
    baseline: bool = False,
) -> AgentParams:
    """Score-function update: ascend (1/B) * sum_n r_n * grad log P_n.

    With baseline=True, each rollout's reward is centered by the mean of the
    other rollouts' rewards (leave-one-out): variance drops and, unlike
    subtracting the plain batch mean, the gradient estimator stays exactly
    unbiased because the baseline is independent of the rollout it centers.
    Updates params in place and returns them.
    """
    if not batch:
        raise ValueError("empty batch")
    rewards = np.array([r for _, r in batch], dtype=np.float64)
    if not np.isfinite(rewards).all():
        raise GradientError(f"non-finite rewards in batch: {rewards}")
    if baseline:
        if len(batch) < 2:
            raise ValueError("baseline needs at least two rollouts")
        coefs = rewards - (rewards.sum() - rewards) / (len(batch) - 1)
    else:
        coefs = rewards.copy()
    coefs /= len(batch)
    actions = np.array([seq.actions for seq, _ in batch], dtype=np.int64)
    grads = policy_gradient(params, space, actions, coefs)
    for name, g in zip(("embed", "w_x", "w_h", "bias", "w_out"), grads):
        if not np.isfinite(g).all():
            raise GradientError(f"non-finite gradient in {name}")
    adam_update(opt, params.arrays(), grads)
    return params


CHECKPOINT_MAGIC = b"BSCK"
CHECKPOINT_VERSION = 1


def _pack_array(a: np.ndarray) -> bytes:
    shape = a.shape
    head = struct.pack("<B", len(shape)) + b"".join(
        struct.pack("<I", d) for d in shape
    )
    return head + a.astype("<f8").tobytes()


def _unpack_array(buf: bytes, pos: int) -> tuple[np.ndarray, int]:
    (ndim,) = struct.unpack_from("<B", buf, pos)
    pos += 1
    shape = struct.unpack_from(f"<{ndim}I", buf, pos)
    pos += 4 * ndim
    n = int(np.prod(shape)) if shape else 1
    a = np.frombuffer(buf, dtype="<f8", count=n, offset=pos).reshape(shape).copy()
    return a, pos + 8 * n


def save_checkpoint(path, params: AgentParams, opt: AdamState) -> None:
    """Versioned binary dump of the policy weights and optimizer moments."""
    opt._ensure(params.arrays())
    parts = [
        CHECKPOINT_MAGIC,
        struct.pack("<B", CHECKPOINT_VERSION),
        struct.pack("<Q", opt.step),
        struct.pack("<4d", opt.lr, opt.beta1, opt.beta2, opt.eps),
    ]
    for a in params.arrays() + opt.m + opt.v:
        parts.append(_pack_array(a))
    with open(path, "wb") as fh:
        fh.write(b"".join(parts))


def load_checkpoint(path) -> tuple[AgentParams, AdamState]:
    buf = open(path, "rb").read()
    if buf[:4] != CHECKPOINT_MAGIC:
        raise ValueError(f"bad checkpoint magic {buf[:4]!r}")
    (version,) = struct.unpack_from("<B", buf, 4)
    if version != CHECKPOINT_VERSION:
        raise ValueError(f"unsupported checkpoint version {version}")
    (step,) = struct.unpack_from("<Q", buf, 5)
    lr, b1, b2, eps = struct.unpack_from("<4d", buf, 13)
    pos = 13 + 32
    arrays = []
    for _ in range(15):
        a, pos = _unpack_array(buf, pos)
        arrays.append(a)
    params = AgentParams(*arrays[:5])
    opt = AdamState(lr=lr, beta1=b1, beta2=b2, eps=eps, step=step,
                    m=arrays[5:10], v=arrays[10:15])
    return params, opt
