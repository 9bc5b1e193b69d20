// Cluster-id color palette. Must stay in lockstep with the server's SVG
// palette so canvas colors match exported drawings: eight named colors, then
// golden-angle HSV extras.

const NAMED_RGB: [number, number, number][] = [
  [0.0, 0.0, 0.0], // black
  [1.0, 0.0, 0.0], // red
  [0.0, 0.0, 1.0], // blue
  [0.0, 1.0, 0.0], // green
  [1.0, 0.647, 0.0], // orange
  [0.502, 0.0, 0.502], // purple
  [0.647, 0.165, 0.165], // brown
  [0.502, 0.502, 0.502], // gray
];

export const NOISE_COLOR_INDEX = 7; // gray

function hsvToRgb(h: number, s: number, v: number): [number, number, number] {
  if (s === 0) return [v, v, v];
  const i = Math.floor(h * 6);
  const f = h * 6 - i;
  const p = v * (1 - s);
  const q = v * (1 - s * f);
  const t = v * (1 - s * (1 - f));
  switch (((i % 6) + 6) % 6) {
    case 0:
      return [v, t, p];
    case 1:
      return [q, v, p];
    case 2:
      return [p, v, t];
    case 3:
      return [p, q, v];
    case 4:
      return [t, p, v];
    default:
      return [v, p, q];
  }
}

export function paletteRgb(index: number): [number, number, number] {
  if (index < 0) throw new Error(`palette index must be >= 0, got ${index}`);
  if (index < NAMED_RGB.length) return NAMED_RGB[index];
  const hue = (((index - 8) * 137.508) % 360) / 360;
  return hsvToRgb(hue, 0.8, 0.85);
}

export function colorForCluster(index: number): string {
  const [r, g, b] = paletteRgb(index);
  const hex = (x: number) => Math.round(x * 255).toString(16).padStart(2, "0");
  return `#${hex(r)}${hex(g)}${hex(b)}`;
}
