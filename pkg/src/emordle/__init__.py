"""emordle: a deterministic engine for emotion-conveying animated word clouds.

Pipeline: parse a weighted word list, lay it out on a canvas, instantiate an
emotion scheme (dance, fade, explosion, shiver, or a user-authored one)
under two global knobs, entropy and speed, then render frames, encode GIFs,
or export the portable animation descriptor the bundled browser player
consumes.
"""

from .animation import (Channel, ChannelKind, EasingKind, Keyframe, PropertyState,
                        REST_STATE, REST_VALUE, Timeline, ease, loop_phase,
                        sample_channel, sample_timeline)
from .descriptor_io import (export_descriptor, export_layout, import_descriptor,
                            import_layout)
from .gif import encode_gif
from .grouping import (GroupAssignment, GroupingStrategy, group_count_for_entropy,
                       group_positional, group_random)
from .layout import (Dimensions, PlacedWord, WordleLayout, check_overlap,
                     compute_layout, default_font_range, font_size_for_weight)
from .render import (RasterImage, frame_count_for, render_animation, render_frame,
                     render_static)
from .schemes import (AnimationDescriptor, BUILTIN_SCHEMES, EmordleSpec,
                      SchemeRegistry, SchemeTemplate, amplitude_for_entropy,
                      cycles_for_speed, duration_for_speed, instantiate_scheme,
                      resolved_amplitudes)
from .schemefile import parse_scheme_file
from .style import Palette, PALETTES, RenderStyle, get_palette, list_palettes
from .textmetrics import list_fonts
from .wordlist import (WordEntry, WordList, normalize_weights, parse_wordle_csv,
                       serialize_wordle_csv)

__version__ = "0.1.0"
