"""
Named qubit channels for the command line.

A preset name is a family followed by its parameters, separated by
underscores: ``identity_2``, ``dephasing_0.3``, ``depolarizing_0.25``,
``amplitude_damping_0.5``, ``replacer_mixed_2``, ``replacer_thermal_0.2``
and ``illumination_toy_0.8_0.1`` (transmissivity, thermal mixing).
"""
from .exceptions import DomainError
from .qmat import (DensityOperator, ReplacerSpec, identity_channel, dephasing_channel,
                   depolarizing_channel, amplitude_damping_channel, thermal_state,
                   illumination_toy)
from .writers import channel_to_json, replacer_to_json

__all__ = ['presets', 'build_preset', 'preset_to_json', 'parse_preset_name', 'preset_names']


def _replacer(kind, value):
    if kind == 'mixed':
        return ReplacerSpec(DensityOperator.maximally_mixed(int(value)))
    if kind == 'thermal':
        return ReplacerSpec(thermal_state(float(value)))
    raise DomainError("replacer presets are 'replacer_mixed_<d>' and "
                      "'replacer_thermal_<mix>', got kind {0!r}".format(kind))


# family -> (number of parameters, builder)
presets = {
    'identity': (1, lambda d: identity_channel(int(d))),
    'dephasing': (1, lambda p: dephasing_channel(float(p))),
    'depolarizing': (1, lambda p: depolarizing_channel(float(p))),
    'amplitude_damping': (1, lambda g: amplitude_damping_channel(float(g))),
    'replacer': (2, _replacer),
    'illumination_toy': (2, lambda eta, mix: illumination_toy(float(eta), float(mix))),
}


def parse_preset_name(name):
    """Split ``name`` into a family and its parameter strings."""
    for family in sorted(presets, key=len, reverse=True):
        if name == family or name.startswith(family + '_'):
            params = name[len(family) + 1:].split('_') if name != family else []
            count = presets[family][0]
            if len(params) != count:
                raise DomainError("preset {0!r} takes {1} parameter(s), got {2}"
                                  .format(family, count, params))
            return family, params
    raise DomainError("unknown preset {0!r}; families are {1}".format(name, sorted(presets)))


def build_preset(name):
    """
    Returns
    -------
    channel : KrausChannel or None
    replacer : ReplacerSpec or None
        Set for the replacer presets and for the illumination toy, whose
        alternative hypothesis is the thermal replacer.
    """
    family, params = parse_preset_name(name)
    try:
        built = presets[family][1](*params)
    except ValueError as ex:
        if isinstance(ex, DomainError):
            raise
        raise DomainError("bad parameter in preset {0!r}: {1}".format(name, ex))
    if isinstance(built, ReplacerSpec):
        return None, built
    if isinstance(built, tuple):
        return built
    return built, None


def preset_to_json(name):
    """
    JSON object for a preset.  A channel with an alternative hypothesis
    carries it under the ``"replacer"`` key.
    """
    channel, replacer = build_preset(name)
    if channel is None:
        out = replacer_to_json(replacer)
    else:
        out = channel_to_json(channel)
        if replacer is not None:
            out['replacer'] = replacer_to_json(replacer)
    out['preset'] = name
    return out


def preset_names():
    return ['identity_2', 'dephasing_0.5', 'depolarizing_0.25', 'amplitude_damping_0.3',
            'replacer_mixed_2', 'replacer_thermal_0.2', 'illumination_toy_0.8_0.1']

