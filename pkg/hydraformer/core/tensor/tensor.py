# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.

    .. spelling::

       autograd
       unbroadcast
"""
import contextlib
from typing import Any, List, Tuple, Union, Callable, Iterator, Optional, Sequence

import numpy as np

from ...common.types import Shape
from ...exception import UsageError, DimensionError, NonFiniteError


Operand = Union['Tensor', float, int, np.ndarray]


def _noop() -> None:
    pass


def unbroadcast(grad: np.ndarray, shape: Shape) -> np.ndarray:
    """Sum ``grad`` down to ``shape``, undoing numpy broadcasting."""
    while grad.ndim > len(shape):
        grad = grad.sum(axis=0)
    for axis, extent in enumerate(shape):
        if extent == 1 and grad.shape[axis] != 1:
            grad = grad.sum(axis=axis, keepdims=True)
    return grad


def broadcast_shape(op: str, *shapes: Shape) -> Shape:
    try:
        return tuple(np.broadcast_shapes(*shapes))
    except ValueError as e:
        raise DimensionError(op, shapes, 'not broadcastable') from e


class Tensor:
    """Dense numpy backed tensor with reverse-mode differentiation.

    Every op returns a new Tensor that remembers its differentiable parents
    in ``_prev`` and knows how to push its gradient to them in
    ``_backward``.  Graphs are only recorded while gradients are enabled
    and at least one operand requires them.

    An op that turns finite operands into NaN or Inf raises
    :exc:`NonFiniteError` unless ``Tensor.check_finite`` is switched off.
    """

    check_finite: bool = True
    _grad_enabled: bool = True

    # Make numpy defer to our reflected operators, ``ndarray * Tensor``
    # dispatches to ``Tensor.__rmul__``.
    __array_ufunc__ = None

    def __init__(
            self,
            data: Any,
            requires_grad: bool = False,
            dtype: Optional[Any] = None,
    ) -> None:
        arr = np.asarray(data)
        if dtype is None:
            dtype = arr.dtype if arr.dtype in (np.float32, np.float64) else np.float64
        self.data: np.ndarray = np.asarray(arr, dtype=dtype, order='C')
        self.requires_grad = requires_grad
        self.grad: Optional[np.ndarray] = None
        self._prev: Tuple['Tensor', ...] = ()
        self._backward: Callable[[], None] = _noop
        self._op = 'leaf'

    def __repr__(self) -> str:
        return 'Tensor(shape=%s, op=%s, requires_grad=%s)' % (
            self.shape, self._op, self.requires_grad,
        )

    @property
    def shape(self) -> Shape:
        return tuple(self.data.shape)

    @property
    def ndim(self) -> int:
        return int(self.data.ndim)

    @property
    def dtype(self) -> Any:
        return self.data.dtype

    def item(self) -> float:
        if self.data.size != 1:
            raise UsageError('item() on tensor of shape %s' % (self.shape,))
        return float(self.data.reshape(-1)[0])

    def numpy(self) -> np.ndarray:
        return self.data

    def detach(self) -> 'Tensor':
        return Tensor(self.data, dtype=self.dtype)

    @classmethod
    @contextlib.contextmanager
    def no_grad(cls) -> Iterator[None]:
        """Evaluate without recording graphs, used by inference and benchmarks."""
        previous = cls._grad_enabled
        cls._grad_enabled = False
        try:
            yield
        finally:
            cls._grad_enabled = previous

    @classmethod
    def result(
            cls,
            data: np.ndarray,
            parents: Sequence['Tensor'],
            op: str,
    ) -> 'Tensor':
        """Wrap an op output, recording the graph edge when needed."""
        if cls.check_finite and not np.isfinite(data).all() \
                and all(np.isfinite(p.data).all() for p in parents):
            raise NonFiniteError(op)
        out = cls(data, dtype=data.dtype)
        out._op = op
        if cls._grad_enabled:
            prev = tuple(p for p in parents if p.requires_grad)
            if prev:
                out.requires_grad = True
                out._prev = prev
        return out

    def accumulate(self, grad: np.ndarray) -> None:
        if not self.requires_grad:
            return
        if grad.shape != self.data.shape:
            grad = np.broadcast_to(grad, self.data.shape)
        if self.grad is None:
            self.grad = np.array(grad, dtype=self.data.dtype, copy=True)
        else:
            self.grad += grad

    def _topological_order(self) -> List['Tensor']:
        order: List[Tensor] = []
        visited = set()
        stack: List[Tuple[Tensor, bool]] = [(self, False)]
        while stack:
            node, expanded = stack.pop()
            if expanded:
                order.append(node)
                continue
            if id(node) in visited:
                continue
            visited.add(id(node))
            stack.append((node, True))
            for parent in node._prev:
                if id(parent) not in visited:
                    stack.append((parent, False))
        return order

    def backward(self, grad: Optional[np.ndarray] = None) -> None:
        """Propagate d(self)/d(leaf) into every reachable leaf's ``grad``."""
        if grad is None:
            if self.data.size != 1:
                raise UsageError(
                    'backward on non-scalar output of shape %s needs an explicit gradient' % (self.shape,),
                )
            grad = np.ones_like(self.data)
        order = self._topological_order()
        self.grad = None
        self.accumulate(np.asarray(grad, dtype=self.data.dtype))
        for node in reversed(order):
            if node.grad is not None:
                node._backward()

    def zero_grad(self) -> None:
        self.grad = None

    # Elementwise arithmetic

    def _lift(self, other: Operand) -> 'Tensor':
        return other if isinstance(other, Tensor) else Tensor(other, dtype=self.dtype)

    def __add__(self, other: Operand) -> 'Tensor':
        other = self._lift(other)
        broadcast_shape('add', self.shape, other.shape)
        out = Tensor.result(self.data + other.data, (self, other), 'add')

        def _backward() -> None:
            assert out.grad is not None
            self.accumulate(unbroadcast(out.grad, self.shape))
            other.accumulate(unbroadcast(out.grad, other.shape))
        out._backward = _backward
        return out

    def __radd__(self, other: Operand) -> 'Tensor':
        return self + other

    def __neg__(self) -> 'Tensor':
        out = Tensor.result(-self.data, (self,), 'neg')

        def _backward() -> None:
            assert out.grad is not None
            self.accumulate(-out.grad)
        out._backward = _backward
        return out

    def __sub__(self, other: Operand) -> 'Tensor':
        return self + (-self._lift(other))

    def __rsub__(self, other: Operand) -> 'Tensor':
        return self._lift(other) + (-self)

    def __mul__(self, other: Operand) -> 'Tensor':
        other = self._lift(other)
        broadcast_shape('mul', self.shape, other.shape)
        out = Tensor.result(self.data * other.data, (self, other), 'mul')

        def _backward() -> None:
            assert out.grad is not None
            if self.requires_grad:
                self.accumulate(unbroadcast(out.grad * other.data, self.shape))
            if other.requires_grad:
                other.accumulate(unbroadcast(out.grad * self.data, other.shape))
        out._backward = _backward
        return out

    def __rmul__(self, other: Operand) -> 'Tensor':
        return self * other

    def __truediv__(self, other: Operand) -> 'Tensor':
        other = self._lift(other)
        broadcast_shape('div', self.shape, other.shape)
        with np.errstate(divide='ignore', invalid='ignore'):
            data = self.data / other.data
        out = Tensor.result(data, (self, other), 'div')

        def _backward() -> None:
            assert out.grad is not None
            if self.requires_grad:
                self.accumulate(unbroadcast(out.grad / other.data, self.shape))
            if other.requires_grad:
                other.accumulate(
                    unbroadcast(-out.grad * self.data / (other.data ** 2), other.shape),
                )
        out._backward = _backward
        return out

    def __rtruediv__(self, other: Operand) -> 'Tensor':
        return self._lift(other) / self

    def __pow__(self, exponent: float) -> 'Tensor':
        if isinstance(exponent, Tensor):
            raise UsageError('only scalar exponents are supported')
        with np.errstate(divide='ignore', invalid='ignore', over='ignore'):
            data = self.data ** exponent
        out = Tensor.result(data, (self,), 'pow')

        def _backward() -> None:
            assert out.grad is not None
            with np.errstate(divide='ignore', invalid='ignore'):
                self.accumulate(out.grad * exponent * self.data ** (exponent - 1))
        out._backward = _backward
        return out

    def __matmul__(self, other: 'Tensor') -> 'Tensor':
        other = self._lift(other)
        if self.ndim < 2 or other.ndim < 2 or self.shape[-1] != other.shape[-2]:
            raise DimensionError('matmul', (self.shape, other.shape))
        broadcast_shape('matmul', self.shape[:-2], other.shape[:-2])
        out = Tensor.result(np.matmul(self.data, other.data), (self, other), 'matmul')

        def _backward() -> None:
            assert out.grad is not None
            if self.requires_grad:
                self.accumulate(
                    unbroadcast(np.matmul(out.grad, np.swapaxes(other.data, -1, -2)), self.shape),
                )
            if other.requires_grad:
                other.accumulate(
                    unbroadcast(np.matmul(np.swapaxes(self.data, -1, -2), out.grad), other.shape),
                )
        out._backward = _backward
        return out

    # Unary functions

    def exp(self) -> 'Tensor':
        with np.errstate(over='ignore'):
            data = np.exp(self.data)
        out = Tensor.result(data, (self,), 'exp')

        def _backward() -> None:
            assert out.grad is not None
            self.accumulate(out.grad * out.data)
        out._backward = _backward
        return out

    def log(self) -> 'Tensor':
        with np.errstate(divide='ignore', invalid='ignore'):
            data = np.log(self.data)
        out = Tensor.result(data, (self,), 'log')

        def _backward() -> None:
            assert out.grad is not None
            self.accumulate(out.grad / self.data)
        out._backward = _backward
        return out

    def relu(self) -> 'Tensor':
        out = Tensor.result(np.maximum(self.data, 0.0), (self,), 'relu')

        def _backward() -> None:
            assert out.grad is not None
            self.accumulate(out.grad * (self.data > 0))
        out._backward = _backward
        return out

    def sigmoid(self) -> 'Tensor':
        # tanh form never overflows
        out = Tensor.result(0.5 * (1.0 + np.tanh(0.5 * self.data)), (self,), 'sigmoid')

        def _backward() -> None:
            assert out.grad is not None
            self.accumulate(out.grad * out.data * (1.0 - out.data))
        out._backward = _backward
        return out

    def tanh(self) -> 'Tensor':
        out = Tensor.result(np.tanh(self.data), (self,), 'tanh')

        def _backward() -> None:
            assert out.grad is not None
            self.accumulate(out.grad * (1.0 - out.data ** 2))
        out._backward = _backward
        return out

    # Reductions and shape manipulation

    def sum(self, axis: Optional[Union[int, Tuple[int, ...]]] = None, keepdims: bool = False) -> 'Tensor':
        out = Tensor.result(
            np.asarray(self.data.sum(axis=axis, keepdims=keepdims)), (self,), 'sum',
        )

        def _backward() -> None:
            assert out.grad is not None
            grad = out.grad
            if axis is not None and not keepdims:
                grad = np.expand_dims(grad, axis)
            self.accumulate(np.broadcast_to(grad, self.shape))
        out._backward = _backward
        return out

    def mean(self, axis: Optional[Union[int, Tuple[int, ...]]] = None, keepdims: bool = False) -> 'Tensor':
        if axis is None:
            count = self.data.size
        else:
            axes = (axis,) if isinstance(axis, int) else axis
            count = int(np.prod([self.shape[a] for a in axes]))
        return self.sum(axis=axis, keepdims=keepdims) * (1.0 / count)

    def reshape(self, *shape: int) -> 'Tensor':
        if len(shape) == 1 and isinstance(shape[0], (tuple, list)):
            shape = tuple(shape[0])
        try:
            data = self.data.reshape(shape)
        except ValueError as e:
            raise DimensionError('reshape', (self.shape, tuple(shape))) from e
        out = Tensor.result(data, (self,), 'reshape')

        def _backward() -> None:
            assert out.grad is not None
            self.accumulate(out.grad.reshape(self.shape))
        out._backward = _backward
        return out

    def transpose(self, *axes: int) -> 'Tensor':
        if len(axes) != self.ndim:
            raise DimensionError('transpose', (self.shape,), 'axes %s' % (axes,))
        out = Tensor.result(np.transpose(self.data, axes), (self,), 'transpose')
        inverse = tuple(np.argsort(axes))

        def _backward() -> None:
            assert out.grad is not None
            self.accumulate(np.transpose(out.grad, inverse))
        out._backward = _backward
        return out

    def __getitem__(self, index: Any) -> 'Tensor':
        out = Tensor.result(np.array(self.data[index]), (self,), 'getitem')

        def _backward() -> None:
            assert out.grad is not None
            grad = np.zeros_like(self.data)
            np.add.at(grad, index, out.grad)
            self.accumulate(grad)
        out._backward = _backward
        return out
