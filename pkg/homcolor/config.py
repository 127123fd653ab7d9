"""
YAML configuration for the solver, the exhaustive checks and DOT export.
"""

import copy
import logging

import yaml

PALETTE = [
    '#1f77b4', '#d62728', '#2ca02c', '#ff7f0e',
    '#9467bd', '#8c564b', '#e377c2', '#7f7f7f',
    '#bcbd22', '#17becf', '#000000', '#aec7e8',
]

DEFAULTS = {
    'solver': {
        'budget': 5000000,
    },
    'exhaustive': {
        'max_edges': 16,
    },
    'dot': {
        'palette': PALETTE,
    },
}

def merge(base, override):
    """
    Recursively merge ``override`` into a copy of ``base``. Nested
    dicts are merged, anything else is replaced.
    """
    merged = copy.deepcopy(base)
    for k, v in (override or {}).items():
        if isinstance(v, dict) and isinstance(merged.get(k), dict):
            merged[k] = merge(merged[k], v)
        else:
            merged[k] = v
    return merged

def load_config(config_file=None):
    """
    :param config_file: a YAML file, or None for the defaults
    :returns dict: the configuration merged over ``DEFAULTS``
    """
    if config_file is None:
        return copy.deepcopy(DEFAULTS)
    logging.info(f'loading configuration from {config_file}...')
    with open(config_file) as fin:
        try:
            config = yaml.safe_load(fin)
        except yaml.YAMLError as e:
            raise ValueError('cannot parse %s: %s' % (config_file, e))
    if config is not None and not isinstance(config, dict):
        raise ValueError('configuration must be a mapping, got %s' % type(config).__name__)
    return merge(DEFAULTS, config)
