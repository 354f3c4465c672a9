# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.

    ``hydraformer decode`` subcommand.
"""
import argparse

from ._common import emit, add_data_flags, load_compatible
from ..harness import load_checkpoint
from ..decoding import token_accuracy, decode_features
from ..common.flag import flags
from ..common.constants import (
    DECODE_MODES, DEFAULT_BEAM_SIZE, DEFAULT_RESCORE_CTC_WEIGHT,
)


def run_decode(args: argparse.Namespace) -> int:
    model = load_checkpoint(args.ckpt).model
    manifest, utterances = load_compatible(args.data, model.decoder.vocab_size, model.frontend.input_dim)
    hyps = decode_features(
        model,
        [u.features for u in utterances],
        args.branch,
        mode=args.mode,
        beam=args.beam,
        ctc_weight=args.ctc_weight,
        length_normalize=args.length_normalize,
    )
    if args.print_hyps:
        for utt, hyp in zip(utterances, hyps):
            print('%s\t%s' % (utt.key, ' '.join(manifest.vocab[t] for t in hyp)))
    emit({
        'command': 'decode',
        'branch': args.branch,
        'mode': args.mode,
        'utterances': len(utterances),
        'accuracy': token_accuracy([u.tokens for u in utterances], hyps),
    })
    return 0


parser = flags.add_subcommand('decode', run_decode, help='Decode a dataset and report token accuracy.')
add_data_flags(parser)
parser.add_argument('--mode', type=str, choices=DECODE_MODES, default='greedy', help='Default: greedy.')
parser.add_argument('--beam', type=int, default=DEFAULT_BEAM_SIZE, help='Default: %d.' % DEFAULT_BEAM_SIZE)
parser.add_argument(
    '--ctc-weight', type=float, default=DEFAULT_RESCORE_CTC_WEIGHT,
    help='Default: %s.  Weight of the CTC score during rescoring.' % DEFAULT_RESCORE_CTC_WEIGHT,
)
parser.add_argument(
    '--length-normalize', action='store_true', default=False,
    help='Default: False.  Divide rescoring scores by hypothesis length.',
)
parser.add_argument(
    '--print-hyps', action='store_true', default=False,
    help='Default: False.  Print one tab separated hypothesis per utterance.',
)
