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
import time
import pathlib
from typing import List, Tuple

from .version import __version__


HYDRAFORMER_START_TIME = time.time()

# /path/to/hydraformer/hydraformer folder
HYDRAFORMER_DIR = os.path.dirname(os.path.dirname(os.path.realpath(__file__)))

COMMA = ','
DOT = '.'
EQUAL = '='
HASH = '#'
UNDERSCORE = '_'
SCRATCH = 'scratch'

# Every versioned artifact (config, plan, checkpoint header, metrics,
# manifest, bench report, projection csv) leads with this field.
FORMAT_VERSION_KEY = 'format_version'
FORMAT_VERSION = 1

ERROR_PREFIX = 'hydraformer-error'

# Reserved token ids, relative to the vocabulary size V.
BLANK_ID = 0
SOS_OFFSET = 2
EOS_OFFSET = 1

# Features
DEFAULT_FEATURE_DIM = 80
DEFAULT_FRAME_SHIFT_SECONDS = 0.01
FEATURE_DTYPE = '<f4'

# Frontend
SUPPORTED_FACTORS: Tuple[int, ...] = (4, 6, 8)
DEFAULT_FACTORS: List[int] = [4, 6, 8]
DEFAULT_USE_POS_ENC = False
POS_ENC_BASE = 10000.0

# Encoder / decoder (desk scale)
DEFAULT_MODEL_DIM = 64
DEFAULT_HEADS = 4
DEFAULT_ENCODER_BLOCKS = 4
DEFAULT_DECODER_BLOCKS_L2R = 2
DEFAULT_DECODER_BLOCKS_R2L = 2
DEFAULT_FFN_DIM = 128
DEFAULT_DEPTHWISE_KERNEL = 7
DEFAULT_DROPOUT_RATE = 0.0
DEFAULT_VOCAB_SIZE = 12
MACARON_SCALE = 0.5

# Tensor core
LAYER_NORM_EPS = 1e-5
GRAD_CHECK_STEP = 1e-5
DEFAULT_DTYPE = 'float64'

# Objectives
DEFAULT_CTC_WEIGHT = 0.3
DEFAULT_REVERSE_WEIGHT = 0.3
DEFAULT_LABEL_SMOOTHING = 0.1
DEFAULT_RESCORE_CTC_WEIGHT = 0.3
DEFAULT_BEAM_SIZE = 10
DEFAULT_LENGTH_NORMALIZE = False

# Optimizer / schedule
DEFAULT_SEED = 777
DEFAULT_STEPS = 2000
DEFAULT_BATCH_SIZE = 8
DEFAULT_PEAK_LR = 2e-3
DEFAULT_WARMUP_STEPS = 200
DEFAULT_GRAD_CLIP = 5.0
ADAM_BETA1 = 0.9
ADAM_BETA2 = 0.98
ADAM_EPS = 1e-9
MAX_CONSECUTIVE_NON_FINITE = 5
DEFAULT_CHECKPOINT_INTERVAL = 500
DEFAULT_METRICS_INTERVAL = 50

# Synthetic data
DEFAULT_SYNTHETIC_UTTS = 32
DEFAULT_FRAMES_PER_TOKEN = 12
DEFAULT_NOISE_STD = 0.05
DEFAULT_MIN_TOKENS = 2
DEFAULT_MAX_TOKENS = 6
DEFAULT_SILENCE_FRAMES = 8
MIN_FRAMES_PER_TOKEN = 9
MIN_VOCAB_SIZE = 4

# Benchmark
DEFAULT_CHUNK_FRAMES = 64
DEFAULT_BENCH_REPETITIONS = 5
BENCH_MODES = ('full', 'chunked')
DECODE_MODES = ('greedy', 'rescore', 'prefix_beam', 'attention')
PROJECTION_METHODS = ('pca', 'tsne')

# File names inside run directories
CHECKPOINT_SUFFIX = '.ckpt'
LAST_CHECKPOINT = 'last' + CHECKPOINT_SUFFIX
BEST_CHECKPOINT = 'best' + CHECKPOINT_SUFFIX
INIT_CHECKPOINT = 'init' + CHECKPOINT_SUFFIX
METRICS_FILE = 'metrics.jsonl'
PROMETHEUS_FILE = 'metrics.prom'
LOCK_FILE = 'train.lock'
MANIFEST_FILE = 'manifest.jsonl'
FEATURES_DIR = 'features'
PROJECTION_CSV = 'projection.csv'
PROJECTION_SVG = 'projection.svg'
RUN_CONFIG_FILE = 'run.cfg'

DEFAULT_ENABLE_METRICS = False
DEFAULT_VERSION = False
DEFAULT_LOG_FILE = None
DEFAULT_LOG_FORMAT = '%(asctime)s - pid:%(process)d [%(levelname)-.1s] %(module)s.%(funcName)s:%(lineno)d - %(message)s'
DEFAULT_LOG_LEVEL = 'INFO'

DEFAULT_DATA_DIRECTORY_PATH = os.path.join(str(pathlib.Path.home()), '.hydraformer')

HYDRAFORMER_AGENT = 'hydraformer v' + __version__
