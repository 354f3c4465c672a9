# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.
"""
import logging
from typing import Dict, List, Tuple, Iterator, Optional

import numpy as np

from .heads import ctc_head, ctc_param_specs
from .config import EncoderConfig, DecoderConfig
from .decoder import decoder_param_specs
from .encoder import encode, encoder_param_specs
from ..core.tensor import Tensor, Parameter, ParamSpecs, ParameterMap
from ..exception import ConfigError
from ..frontend import FeatureBatch, FrontendConfig, frontend_forward, frontend_param_specs
from ..common.utils import name_seed


logger = logging.getLogger(__name__)


def model_param_specs(
        frontend: FrontendConfig,
        encoder: EncoderConfig,
        decoder: DecoderConfig,
) -> ParamSpecs:
    specs = frontend_param_specs(frontend)
    specs.update(encoder_param_specs(encoder))
    specs.update(decoder_param_specs(decoder))
    specs.update(ctc_param_specs(encoder.model_dim, decoder.vocab_size))
    return specs


def validate_configs(
        frontend: FrontendConfig,
        encoder: EncoderConfig,
        decoder: DecoderConfig,
) -> None:
    frontend.validate()
    encoder.validate()
    decoder.validate()
    if not frontend.model_dim == encoder.model_dim == decoder.model_dim:
        raise ConfigError(
            'frontend, encoder and decoder model_dim differ (%d, %d, %d)' % (
                frontend.model_dim, encoder.model_dim, decoder.model_dim,
            ),
            key='encoder.model_dim',
        )


class ModelState:
    """Every parameter of a model, keyed by name, plus the configs that shaped them.

    Names partition into ``frontend.sub{n}.*``, ``encoder.*``, ``decoder.*``
    and ``heads.*``.  This is the unit of checkpointing and transfer.
    """

    def __init__(
            self,
            parameters: ParameterMap,
            frontend: FrontendConfig,
            encoder: EncoderConfig,
            decoder: DecoderConfig,
    ) -> None:
        self.parameters = parameters
        self.frontend = frontend
        self.encoder = encoder
        self.decoder = decoder

    def __iter__(self) -> Iterator[Parameter]:
        return iter(self.parameters.values())

    def __len__(self) -> int:
        return len(self.parameters)

    def __getitem__(self, name: str) -> Parameter:
        return self.parameters[name]

    def __contains__(self, name: object) -> bool:
        return name in self.parameters

    @property
    def factors(self) -> Tuple[int, ...]:
        return tuple(self.frontend.factors)

    def names(self, prefix: str = '') -> List[str]:
        return sorted(n for n in self.parameters if n.startswith(prefix))

    def snapshot(self) -> Dict[str, np.ndarray]:
        return {n: p.data.copy() for n, p in self.parameters.items()}

    def zero_grad(self) -> None:
        for p in self.parameters.values():
            p.tensor.zero_grad()

    def num_values(self) -> int:
        return int(sum(p.data.size for p in self.parameters.values()))

    def encode_branch(
            self,
            batch: FeatureBatch,
            factor: int,
            training: bool = False,
            rng: Optional[np.random.Generator] = None,
    ) -> Tuple[Tensor, List[int]]:
        """Frontend branch ``factor`` followed by the shared encoder."""
        spec = self.frontend.branch(factor)
        hydra, lengths = frontend_forward(self.parameters, batch, spec, self.frontend.use_pos_enc)
        return encode(self.parameters, self.encoder, hydra, lengths, training, rng), lengths

    def ctc_log_probs(self, encoded: Tensor) -> Tensor:
        return ctc_head(self.parameters, encoded)


def initialize(
        frontend: FrontendConfig,
        encoder: EncoderConfig,
        decoder: DecoderConfig,
        seed: int,
) -> ModelState:
    """Fresh model whose every parameter depends only on (seed, name)."""
    validate_configs(frontend, encoder, decoder)
    specs = model_param_specs(frontend, encoder, decoder)
    parameters: ParameterMap = {}
    for name in sorted(specs):
        rng = np.random.default_rng(list(name_seed(seed, name)))
        parameters[name] = Parameter(name, specs[name].sample(rng))
    logger.info(
        'Initialized %d parameters (%d values) with seed %d',
        len(parameters), sum(p.data.size for p in parameters.values()), seed,
    )
    return ModelState(parameters, frontend, encoder, decoder)
