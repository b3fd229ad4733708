#!/usr/bin/env python3
"""The animation math on its own: easing curves and keyframe channels.

Prints a small table of every easing function and shows how a channel
interpolates between keyframes, including the hold-after-last rule that
schemes rely on.
"""

from emordle import Channel, ChannelKind, EasingKind, Keyframe, sample_channel
from emordle.animation import Timeline, sample_timeline

print("easing curves sampled on a coarse grid (f(0)=0, f(1)=1 for all):\n")
grid = [k / 8 for k in range(9)]
header = "t:        " + "  ".join(f"{t:5.3f}" for t in grid)
print(header)
for kind in EasingKind:
    from emordle import ease
    row = "  ".join(f"{ease(kind, t):5.3f}" for t in grid)
    print(f"{kind.value:<10}{row}")

print("\nnote the bump curve overshooting 1.0 in the interior, the")
print("back-out wobble the explosion scheme uses for its pop.")

channel = Channel(ChannelKind.TRANSLATE_Y, (
    Keyframe(0.0, 0.0, EasingKind.SLOW_IN),
    Keyframe(0.5, 30.0, EasingKind.SLOW_OUT),
    Keyframe(0.8, 0.0),
))
print("\na drop-and-recover channel; value holds after the final keyframe:")
for t in (0.0, 0.25, 0.5, 0.65, 0.8, 0.95):
    print(f"  t={t:4.2f}  y={sample_channel(channel, t):7.3f}")

timeline = Timeline((channel,))
state = sample_timeline(timeline, 0.0)
print(f"\ntimeline at t=0 is the rest pose: {state}")
