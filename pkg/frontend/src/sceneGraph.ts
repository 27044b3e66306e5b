/** Scene document -> three.js object graph.
 *
 * Pure data mapping, no renderer involved, so it runs headless in
 * tests. Every object in the document becomes exactly one child of the
 * returned group (unknown kinds get a small marker), which keeps the
 * on-screen count equal to the document count. Geometry parameters are
 * taken verbatim from the document; the only locally invented numbers
 * are presentation extents (how far an infinite line or plane is drawn,
 * marker sizes), never coordinates.
 */
import * as THREE from "three";

import type { Scene, SceneObject } from "./types.js";

export interface SceneGraphOptions {
  /** Radius used to draw points and unknown-kind markers. */
  pointRadius?: number;
  /** Half-length of the segment standing in for an infinite line. */
  lineExtent?: number;
  /** Edge length of the quad standing in for an infinite plane. */
  planeExtent?: number;
  /** Tessellation for spheres and circles. */
  segments?: number;
}

const DEFAULTS: Required<SceneGraphOptions> = {
  pointRadius: 0.02,
  lineExtent: 5,
  planeExtent: 4,
  segments: 48,
};

function toColor(object: SceneObject): THREE.Color {
  return new THREE.Color(object.color.r, object.color.g, object.color.b);
}

function param(object: SceneObject, key: string): number {
  return object.params[key] ?? 0;
}

function surfaceMaterial(object: SceneObject): THREE.Material {
  return new THREE.MeshStandardMaterial({
    color: toColor(object),
    transparent: true,
    opacity: 0.35,
    side: THREE.DoubleSide,
  });
}

function solidMaterial(object: SceneObject): THREE.Material {
  return new THREE.MeshStandardMaterial({ color: toColor(object) });
}

function lineMaterial(object: SceneObject): THREE.LineBasicMaterial {
  return new THREE.LineBasicMaterial({ color: toColor(object) });
}

function buildPoint(object: SceneObject, opts: Required<SceneGraphOptions>) {
  const mesh = new THREE.Mesh(
    new THREE.SphereGeometry(opts.pointRadius, 16, 12),
    solidMaterial(object),
  );
  mesh.position.set(param(object, "x"), param(object, "y"), param(object, "z"));
  return mesh;
}

function buildSphere(object: SceneObject, opts: Required<SceneGraphOptions>) {
  const mesh = new THREE.Mesh(
    new THREE.SphereGeometry(param(object, "r"), opts.segments, opts.segments / 2),
    surfaceMaterial(object),
  );
  mesh.position.set(param(object, "cx"), param(object, "cy"), param(object, "cz"));
  return mesh;
}

function buildPlane(object: SceneObject, opts: Required<SceneGraphOptions>) {
  const mesh = new THREE.Mesh(
    new THREE.PlaneGeometry(opts.planeExtent, opts.planeExtent),
    surfaceMaterial(object),
  );
  const normal = new THREE.Vector3(
    param(object, "nx"),
    param(object, "ny"),
    param(object, "nz"),
  );
  mesh.quaternion.setFromUnitVectors(new THREE.Vector3(0, 0, 1), normal);
  mesh.position.copy(normal).multiplyScalar(param(object, "d"));
  return mesh;
}

function buildLine(object: SceneObject, opts: Required<SceneGraphOptions>) {
  const point = new THREE.Vector3(
    param(object, "px"),
    param(object, "py"),
    param(object, "pz"),
  );
  const direction = new THREE.Vector3(
    param(object, "dx"),
    param(object, "dy"),
    param(object, "dz"),
  );
  const start = point.clone().addScaledVector(direction, -opts.lineExtent);
  const end = point.clone().addScaledVector(direction, opts.lineExtent);
  const geometry = new THREE.BufferGeometry().setFromPoints([start, end]);
  return new THREE.Line(geometry, lineMaterial(object));
}

function buildCircle(object: SceneObject, opts: Required<SceneGraphOptions>) {
  const radius = param(object, "r");
  const points: THREE.Vector3[] = [];
  for (let i = 0; i < opts.segments; i++) {
    const angle = (i / opts.segments) * Math.PI * 2;
    points.push(
      new THREE.Vector3(Math.cos(angle) * radius, Math.sin(angle) * radius, 0),
    );
  }
  const loop = new THREE.LineLoop(
    new THREE.BufferGeometry().setFromPoints(points),
    lineMaterial(object),
  );
  const normal = new THREE.Vector3(
    param(object, "nx"),
    param(object, "ny"),
    param(object, "nz"),
  );
  loop.quaternion.setFromUnitVectors(new THREE.Vector3(0, 0, 1), normal);
  loop.position.set(param(object, "cx"), param(object, "cy"), param(object, "cz"));
  return loop;
}

function buildMarker(object: SceneObject, opts: Required<SceneGraphOptions>) {
  return new THREE.Mesh(
    new THREE.OctahedronGeometry(opts.pointRadius * 2),
    solidMaterial(object),
  );
}

export function buildObject(
  object: SceneObject,
  options: SceneGraphOptions = {},
): THREE.Object3D {
  const opts = { ...DEFAULTS, ...options };
  let built: THREE.Object3D;
  switch (object.kind) {
    case "point":
      built = buildPoint(object, opts);
      break;
    case "sphere":
      built = buildSphere(object, opts);
      break;
    case "plane":
      built = buildPlane(object, opts);
      break;
    case "line":
      built = buildLine(object, opts);
      break;
    case "circle":
      built = buildCircle(object, opts);
      break;
    default:
      built = buildMarker(object, opts);
  }
  built.name = object.id;
  built.userData = { kind: object.kind, label: object.label };
  return built;
}

export function buildSceneGraph(
  scene: Scene,
  options: SceneGraphOptions = {},
): THREE.Group {
  const group = new THREE.Group();
  group.name = "scene";
  for (const object of scene.objects) {
    group.add(buildObject(object, options));
  }
  return group;
}

/** Show or hide one object by id; returns false when the id is absent. */
export function setObjectVisible(
  group: THREE.Group,
  id: string,
  visible: boolean,
): boolean {
  const child = group.children.find((c) => c.name === id);
  if (!child) return false;
  child.visible = visible;
  return true;
}
