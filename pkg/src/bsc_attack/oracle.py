"""The black-box target: a query-counting prediction interface.

Two backends ship in-process: a deterministic toy video classifier (template
matching on the mean frame, softmax over cosine scores) good enough to attack
at desk scale, and a line-JSON subprocess client for wrapping real models.
Either way the engine sees only probability vectors, never gradients.
"""

from __future__ import annotations

import base64
import json
import queue
import subprocess
import threading
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .tensor_io import VideoClip


class OracleError(RuntimeError):
    """The oracle misbehaved: bad handshake, bad reply, dead process."""


def validate_probs(probs, classes: int | None = None) -> np.ndarray:
    arr = np.asarray(probs, dtype=np.float64).ravel()
    if classes is not None and arr.size != classes:
        raise OracleError(f"expected {classes} probabilities, got {arr.size}")
    if arr.size < 2:
        raise OracleError(f"prediction needs >= 2 classes, got {arr.size}")
    if (arr < 0).any() or (arr > 1).any():
        raise OracleError(f"probabilities outside [0, 1]: {arr}")
    if abs(arr.sum() - 1.0) > 1e-6:
        raise OracleError(f"probabilities sum to {arr.sum()}, not 1")
    return arr


class Oracle:
    """Base predict-and-count interface.

    Subclasses implement _predict. The query counter increments once per
    completed prediction, atomically, so concurrent callers still account
    exactly. An optional transform hook (e.g. an input-smoothing defense)
    runs on the clip before prediction.
    """

    def __init__(self, transform: Callable[[VideoClip], VideoClip] | None = None):
        self._lock = threading.Lock()
        self._count = 0
        self._transform = transform

    @property
    def query_count(self) -> int:
        with self._lock:
            return self._count

    def predict(self, clip: VideoClip) -> np.ndarray:
        if self._transform is not None:
            clip = self._transform(clip)
        probs = validate_probs(self._predict(clip))
        with self._lock:
            self._count += 1
        return probs

    def _predict(self, clip: VideoClip) -> np.ndarray:
        raise NotImplementedError

    def close(self) -> None:
        pass

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()


@dataclass(frozen=True)
class ToyClassifierSpec:
    """Geometry and sharpness of the built-in template classifier.

    Each class owns two Gaussian intensity bumps at distinct locations (one
    in the top half of the frame, one in the bottom); templates are the
    L2-normalized bump pairs (equivalently the class mean of the generated
    samples). feature_rows/feature_cols set the bump extent in pixels.
    """

    classes: int = 8
    height: int = 64
    width: int = 64
    temperature: float = 20.0
    seed: int = 0
    feature_rows: float = 3.0  # vertical bump extent
    feature_cols: float = 6.0  # horizontal bump extent

    def __post_init__(self):
        if self.classes < 2:
            raise ValueError(f"need >= 2 classes, got {self.classes}")
        if self.temperature <= 0:
            raise ValueError(f"temperature must be > 0, got {self.temperature}")


def _bump_centers(spec: ToyClassifierSpec) -> np.ndarray:
    """Per class, two (row, col) bump centers: one top-half, one bottom-half.

    Centers sit on jittered per-half grids, deterministic in the spec seed.
    """
    rng = np.random.default_rng([spec.seed, 0xB5C])
    margin = 2 * spec.feature_cols
    cols = np.linspace(margin, spec.width - margin, spec.classes)
    # four well-separated row zones, two in each half of the frame
    zones = np.array([0.14, 0.33, 0.64, 0.83]) * spec.height
    out = np.empty((spec.classes, 2, 2))
    top_cols = rng.permutation(cols)
    bottom_cols = rng.permutation(cols)
    for k in range(spec.classes):
        out[k, 0] = (zones[k % 2], top_cols[k])
        out[k, 1] = (zones[2 + (k // 2) % 2], bottom_cols[k])
    out += rng.uniform(-1.5, 1.5, size=out.shape)
    return out


def toy_templates(spec: ToyClassifierSpec) -> np.ndarray:
    """(K, H, W) L2-normalized class patterns, two bumps each."""
    centers = _bump_centers(spec)
    yy, xx = np.mgrid[0 : spec.height, 0 : spec.width]
    out = np.empty((spec.classes, spec.height, spec.width))
    for k in range(spec.classes):
        pattern = np.zeros((spec.height, spec.width))
        for cy, cx in centers[k]:
            pattern += np.exp(
                -((yy - cy) ** 2) / (2 * spec.feature_rows**2)
                - ((xx - cx) ** 2) / (2 * spec.feature_cols**2)
            )
        out[k] = pattern / np.linalg.norm(pattern)
    return out


class ToyOracle(Oracle):
    """Template matcher: per-frame pooled cosine scores through a softmax.

    Each frame is grayscaled, max-pooled horizontally (window 8), and
    unit-normalized; the temporal mean of its cosines against the equally
    pooled class templates feeds the softmax. Two choices keep the oracle
    honestly attackable by drifting overlays, the way real video models are:
    frames are scored individually (a temporal mean frame would smear a
    moving glyph to near-invisibility), and the horizontal pooling makes a
    row of text saturate at its blended brightness, so piling overlapping
    overlays onto the same rows gains nothing over covering them once.
    """

    POOL = 8

    def __init__(self, spec: ToyClassifierSpec, transform=None):
        super().__init__(transform)
        self.spec = spec
        self.templates = toy_templates(spec)
        self._pool = self.POOL if spec.width % self.POOL == 0 else 1
        pooled = self._pool_rows(self.templates).reshape(spec.classes, -1)
        pooled /= np.linalg.norm(pooled, axis=1)[:, None]
        self._flat = pooled

    @property
    def classes(self) -> int:
        return self.spec.classes

    def _pool_rows(self, arr: np.ndarray) -> np.ndarray:
        shape = arr.shape[:-1] + (arr.shape[-1] // self._pool, self._pool)
        return arr.reshape(shape).max(axis=-1)

    def _predict(self, clip: VideoClip) -> np.ndarray:
        if (clip.height, clip.width) != (self.spec.height, self.spec.width):
            raise OracleError(
                f"clip is {clip.height}x{clip.width}, oracle expects "
                f"{self.spec.height}x{self.spec.width}"
            )
        # channel sums are <= 765, exactly representable in float32
        ones = np.ones(clip.channels, dtype=np.float32)
        sums = clip.data.reshape(-1, clip.channels).astype(np.float32) @ ones
        gray = sums.reshape(clip.frames, clip.height, clip.width).astype(np.float64)
        gray /= clip.channels
        frames = self._pool_rows(gray).reshape(clip.frames, -1)
        norms = np.sqrt(np.einsum("tp,tp->t", frames, frames))
        safe = norms > 0
        frames[safe] /= norms[safe, None]
        scores = self._flat @ (frames.sum(axis=0) / clip.frames)
        z = self.spec.temperature * scores
        z -= z.max()
        e = np.exp(z)
        return e / e.sum()


def toy_video(
    spec: ToyClassifierSpec,
    label: int,
    seed: int,
    frames: int = 16,
    channels: int = 3,
    background: float = 40.0,
    amplitude: float = 195.0,
    confusion: float = 0.45,
    noise: float = 6.0,
) -> VideoClip:
    """A sample of the labeled class, plus per-frame Gaussian noise.

    Besides the class's own bump pair, each sample carries a weaker copy of
    another class's pattern (scaled by `confusion`): real clips contain
    confusable secondary content, and it gives the attack a runner-up class
    whose evidence an overlay can amplify.
    """
    rng = np.random.default_rng([spec.seed, label, seed])
    centers = _bump_centers(spec)
    yy, xx = np.mgrid[0 : spec.height, 0 : spec.width]

    def pattern(k):
        out = np.zeros((spec.height, spec.width))
        for cy, cx in centers[k]:
            out += np.exp(
                -((yy - cy) ** 2) / (2 * spec.feature_rows**2)
                - ((xx - cx) ** 2) / (2 * spec.feature_cols**2)
            )
        return out

    # runner-up drawn from classes whose bump rows share no zone with the
    # label's: its evidence stays separable from the true class's rows
    rivals = [
        k
        for k in range(spec.classes)
        if k % 2 != label % 2 and (k // 2) % 2 != (label // 2) % 2
    ] or [k for k in range(spec.classes) if k != label]
    runner_up = int(rivals[rng.integers(len(rivals))])
    base = (
        background
        + amplitude * pattern(label)
        + confusion * amplitude * pattern(runner_up)
    )
    data = base[None, :, :] + rng.normal(0, noise, (frames, spec.height, spec.width))
    data = np.clip(data, 0, 255).astype(np.uint8)
    return VideoClip(np.repeat(data[..., None], channels, axis=3))


class SubprocessOracle(Oracle):
    """Client for an external model server speaking line-delimited JSON.

    The child is spawned once; a hello handshake fixes the class count and
    expected dims; each predict ships the raw payload base64-encoded and waits
    for the matching-id reply. Requests are serialized over the pipe, so
    callers may be concurrent.
    """

    def __init__(
        self,
        command: list[str],
        expected_dims: tuple[int, int, int, int] | None = None,
        timeout: float = 30.0,
        transform=None,
    ):
        super().__init__(transform)
        self.timeout = timeout
        self._next_id = 0
        self._io_lock = threading.Lock()
        self._lines: queue.Queue = queue.Queue()
        try:
            self._proc = subprocess.Popen(
                command,
                stdin=subprocess.PIPE,
                stdout=subprocess.PIPE,
                text=True,
                bufsize=1,
            )
        except OSError as exc:
            raise OracleError(f"cannot spawn oracle {command!r}: {exc}") from exc
        self._reader = threading.Thread(target=self._pump, daemon=True)
        self._reader.start()
        hello = self._request({"type": "hello"})
        if hello.get("type") != "hello":
            raise OracleError(f"handshake reply has type {hello.get('type')!r}")
        try:
            self.classes = int(hello["K"])
            self.dims = tuple(int(d) for d in hello["dims"])
        except (KeyError, TypeError, ValueError) as exc:
            raise OracleError(f"malformed handshake reply: {hello}") from exc
        if len(self.dims) != 4:
            raise OracleError(f"handshake dims must be [T,H,W,C], got {self.dims}")
        if expected_dims is not None and tuple(expected_dims) != self.dims:
            raise OracleError(
                f"oracle serves dims {self.dims}, expected {tuple(expected_dims)}"
            )

    def _pump(self):
        for line in self._proc.stdout:
            self._lines.put(line)
        self._lines.put(None)  # EOF sentinel

    def _request(self, payload: dict) -> dict:
        with self._io_lock:
            req_id = self._next_id
            self._next_id += 1
            payload = {"id": req_id, **payload}
            try:
                self._proc.stdin.write(json.dumps(payload) + "\n")
                self._proc.stdin.flush()
            except (BrokenPipeError, ValueError) as exc:
                raise OracleError(
                    f"oracle process unreachable (exit code {self._proc.poll()})"
                ) from exc
            try:
                line = self._lines.get(timeout=self.timeout)
            except queue.Empty:
                raise OracleError(f"oracle timed out after {self.timeout}s") from None
            if line is None:
                raise OracleError(
                    f"oracle process exited mid-query (exit code {self._proc.poll()})"
                )
            try:
                reply = json.loads(line)
            except json.JSONDecodeError as exc:
                raise OracleError(f"malformed oracle reply: {line!r}") from exc
            if reply.get("id") != req_id:
                raise OracleError(
                    f"reply id {reply.get('id')} does not match request {req_id}"
                )
            if reply.get("type") == "error":
                raise OracleError(f"oracle error: {reply.get('message')}")
            return reply

    def _predict(self, clip: VideoClip) -> np.ndarray:
        if clip.shape != self.dims:
            raise OracleError(f"clip dims {clip.shape} != oracle dims {self.dims}")
        reply = self._request(
            {
                "type": "predict",
                "dims": list(clip.shape),
                "data_b64": base64.b64encode(clip.data.tobytes()).decode("ascii"),
            }
        )
        if reply.get("type") != "prediction":
            raise OracleError(f"expected prediction reply, got {reply.get('type')!r}")
        return validate_probs(reply.get("probs"), self.classes)

    def caption(self, clip: VideoClip) -> str:
        """Ask the server to describe the clip's first frame (protocol extension).

        Not a prediction: does not consume a query.
        """
        reply = self._request(
            {
                "type": "caption",
                "dims": list(clip.shape),
                "data_b64": base64.b64encode(clip.data.tobytes()).decode("ascii"),
            }
        )
        if reply.get("type") != "caption" or not isinstance(reply.get("text"), str):
            raise OracleError(f"malformed caption reply: {reply}")
        return reply["text"]

    def close(self) -> None:
        proc = getattr(self, "_proc", None)
        if proc is None or proc.poll() is not None:
            return
        try:
            proc.stdin.close()
        except OSError:
            pass
        try:
            proc.wait(timeout=2)
        except subprocess.TimeoutExpired:
            proc.kill()
            proc.wait()
