# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.
"""
import os
import json
import logging
from types import TracebackType
from typing import Any, Dict, List, Type, Optional, Generator

from .step import StepRecord
from ..common.types import PathLike
from ..common.utils import json_line


logger = logging.getLogger(__name__)


def get_collector(history: List[StepRecord]) -> Any:
    # pylint: disable=import-outside-toplevel
    from prometheus_client.core import Metric
    from prometheus_client.registry import Collector

    class StepCollector(Collector):

        def __init__(self, history: List[StepRecord]) -> None:
            self.history = history

        def collect(self) -> Generator[Metric, None, None]:
            # pylint: disable=import-outside-toplevel
            from prometheus_client.core import GaugeMetricFamily, CounterMetricFamily

            if not self.history:
                return
            last = self.history[-1]
            yield GaugeMetricFamily('hydraformer_step', 'Last completed training step', value=last.step)
            yield GaugeMetricFamily('hydraformer_loss_total', 'Joint loss of the last step', value=last.loss_total)
            yield GaugeMetricFamily('hydraformer_loss_ctc', 'CTC loss of the last step', value=last.loss_ctc)
            yield GaugeMetricFamily('hydraformer_learning_rate', 'Learning rate of the last step', value=last.lr)
            yield GaugeMetricFamily('hydraformer_grad_norm', 'Pre-clip gradient norm of the last step', value=last.grad_norm)
            selected = CounterMetricFamily(
                'hydraformer_branch_selected',
                'Steps trained per subsampling branch',
                labels=['branch'],
            )
            counts: Dict[int, int] = {}
            for record in self.history:
                counts[record.branch] = counts.get(record.branch, 0) + 1
            for branch, count in sorted(counts.items()):
                selected.add_metric([str(branch)], count)
            yield selected

    return StepCollector(history)


class MetricsWriter:
    """Appends StepRecords to a JSON lines file, optionally mirrored to a Prometheus textfile."""

    def __init__(self, path: PathLike, prometheus_path: Optional[PathLike] = None) -> None:
        self.path = os.fspath(path)
        self.prometheus_path = None if prometheus_path is None else os.fspath(prometheus_path)
        self.history: List[StepRecord] = []
        self._file: Optional[Any] = None
        self._registry: Optional[Any] = None

    def __enter__(self) -> 'MetricsWriter':
        self.open()
        return self

    def __exit__(
            self,
            exc_type: Optional[Type[BaseException]],
            exc_val: Optional[BaseException],
            exc_tb: Optional[TracebackType],
    ) -> None:
        self.close()

    def open(self) -> None:
        if self.prometheus_path is not None:
            # pylint: disable=import-outside-toplevel
            from prometheus_client.core import CollectorRegistry
            registry = CollectorRegistry()
            registry.register(get_collector(self.history))
            self._registry = registry
        f = open(self.path, 'w', encoding='utf-8')    # pylint: disable=consider-using-with
        try:
            f.write(json_line({}) + '\n')
        except OSError:
            f.close()
            raise
        self._file = f

    def write(self, record: StepRecord) -> None:
        self.history.append(record)
        if self._file is not None:
            self._file.write(json.dumps(record.to_json(), separators=(',', ':')) + '\n')

    def flush(self) -> None:
        if self._file is not None:
            self._file.flush()
        if self._registry is not None and self.prometheus_path is not None:
            # pylint: disable=import-outside-toplevel
            from prometheus_client import write_to_textfile
            write_to_textfile(self.prometheus_path, self._registry)

    def close(self) -> None:
        if self._file is not None:
            self.flush()
            self._file.close()
            self._file = None


def read_metrics(path: PathLike) -> List[StepRecord]:
    with open(path, 'r', encoding='utf-8') as f:
        lines = f.read().splitlines()
    return [StepRecord(**json.loads(line)) for line in lines[1:] if line.strip()]
