/** Viridis-like sequential colormap, interpolated from anchor stops. */

const STOPS: [number, number, number][] = [
  [68, 1, 84],
  [72, 40, 120],
  [62, 74, 137],
  [49, 104, 142],
  [38, 130, 142],
  [31, 158, 137],
  [53, 183, 121],
  [109, 205, 89],
  [180, 222, 44],
  [253, 231, 37],
];

function hex2(v: number): string {
  return Math.round(v).toString(16).padStart(2, "0");
}

/** Map t in [0, 1] to a hex color; values outside are clamped. */
export function viridis(t: number): string {
  if (!Number.isFinite(t)) return "#ffffff";
  const u = Math.min(1, Math.max(0, t)) * (STOPS.length - 1);
  const i = Math.min(STOPS.length - 2, Math.floor(u));
  const f = u - i;
  const [r0, g0, b0] = STOPS[i];
  const [r1, g1, b1] = STOPS[i + 1];
  return `#${hex2(r0 + f * (r1 - r0))}${hex2(g0 + f * (g1 - g0))}${hex2(b0 + f * (b1 - b0))}`;
}
