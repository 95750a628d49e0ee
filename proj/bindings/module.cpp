// Python bindings for the core operations: procedural shapes, the geometry
// kernel, evaluation metrics, the set-latent VAE, and the pipeline stages.
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "unipart/checkpoint.hpp"
#include "unipart/eval.hpp"
#include "unipart/latent_seg.hpp"
#include "unipart/mesh.hpp"
#include "unipart/pipeline.hpp"
#include "unipart/procgen.hpp"
#include "unipart/run_config.hpp"
#include "unipart/vae.hpp"

namespace py = pybind11;
using namespace unipart;

namespace {

std::vector<mesh::Vec3> to_points(const py::array_t<double>& array) {
  auto buf = array.unchecked<2>();
  if (buf.shape(1) != 3)
    throw std::invalid_argument("expected an [n, 3] float array");
  std::vector<mesh::Vec3> pts(std::size_t(buf.shape(0)));
  for (py::ssize_t i = 0; i < buf.shape(0); ++i)
    pts[std::size_t(i)] = {buf(i, 0), buf(i, 1), buf(i, 2)};
  return pts;
}

py::array_t<double> from_points(const std::vector<mesh::Vec3>& pts) {
  py::array_t<double> out({py::ssize_t(pts.size()), py::ssize_t(3)});
  auto buf = out.mutable_unchecked<2>();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    buf(py::ssize_t(i), 0) = pts[i].x;
    buf(py::ssize_t(i), 1) = pts[i].y;
    buf(py::ssize_t(i), 2) = pts[i].z;
  }
  return out;
}

py::array_t<int> from_faces(const std::vector<std::array<int, 3>>& faces) {
  py::array_t<int> out({py::ssize_t(faces.size()), py::ssize_t(3)});
  auto buf = out.mutable_unchecked<2>();
  for (std::size_t i = 0; i < faces.size(); ++i)
    for (int k = 0; k < 3; ++k) buf(py::ssize_t(i), k) = faces[i][std::size_t(k)];
  return out;
}

mesh::TriMesh to_mesh(const py::array_t<double>& vertices,
                      const py::array_t<int>& faces) {
  mesh::TriMesh m;
  m.vertices = to_points(vertices);
  auto f = faces.unchecked<2>();
  if (f.shape(1) != 3)
    throw std::invalid_argument("expected an [m, 3] int face array");
  for (py::ssize_t i = 0; i < f.shape(0); ++i)
    m.faces.push_back({f(i, 0), f(i, 1), f(i, 2)});
  return m;
}

py::dict mesh_to_dict(const mesh::TriMesh& m) {
  py::dict out;
  out["vertices"] = from_points(m.vertices);
  out["faces"] = from_faces(m.faces);
  out["face_labels"] = py::cast(m.face_labels);
  return out;
}

py::array_t<double> tensor_to_array(const tad::Tensor& t) {
  if (t.shape().size() != 2)
    throw std::invalid_argument("expected a rank-2 tensor");
  py::array_t<double> out(
      {py::ssize_t(t.shape()[0]), py::ssize_t(t.shape()[1])});
  auto buf = out.mutable_unchecked<2>();
  for (std::size_t r = 0; r < t.shape()[0]; ++r)
    for (std::size_t c = 0; c < t.shape()[1]; ++c)
      buf(py::ssize_t(r), py::ssize_t(c)) = t.data()[r * t.shape()[1] + c];
  return out;
}

tad::Tensor array_to_tensor(const py::array_t<double>& array) {
  auto buf = array.unchecked<2>();
  std::vector<double> data;
  data.reserve(std::size_t(buf.shape(0) * buf.shape(1)));
  for (py::ssize_t r = 0; r < buf.shape(0); ++r)
    for (py::ssize_t c = 0; c < buf.shape(1); ++c) data.push_back(buf(r, c));
  return tad::Tensor::from_data(
      {std::size_t(buf.shape(0)), std::size_t(buf.shape(1))},
      std::move(data));
}

// Set-latent VAE loaded from a run config + checkpoints, exposed for
// encoding, field decoding, and latent segmentation.
class PyVae {
 public:
  PyVae(const std::string& config_path, const std::string& vae_ckpt,
        const std::string& pos_ckpt)
      : config_(load_run_config(config_path)),
        model_(config_.vae.config, 0) {
    nn::load_checkpoint(model_.params(), vae_ckpt);
    if (!pos_ckpt.empty()) nn::load_checkpoint(model_.pos_params(), pos_ckpt);
  }

  py::array_t<double> encode(const py::array_t<double>& positions,
                             const py::array_t<double>& normals,
                             const std::vector<int>& labels, int num_parts,
                             std::uint64_t seed) const {
    tad::NoGradGuard guard;
    procgen::SurfaceSamples samples;
    samples.positions = to_points(positions);
    samples.normals = to_points(normals);
    samples.labels = labels;
    if (samples.normals.size() != samples.positions.size() ||
        samples.labels.size() != samples.positions.size())
      throw std::invalid_argument("positions/normals/labels length mismatch");
    Rng rng(seed);
    return tensor_to_array(model_.encode(samples, num_parts, rng).mean);
  }

  py::array_t<double> decode_occupancy(const py::array_t<double>& latent,
                                       const py::array_t<double>& queries)
      const {
    tad::NoGradGuard guard;
    tad::Tensor logits =
        model_.decode_geometry(array_to_tensor(latent), to_points(queries));
    py::array_t<double> out(py::ssize_t(logits.shape()[0]));
    auto buf = out.mutable_unchecked<1>();
    for (std::size_t i = 0; i < logits.shape()[0]; ++i)
      buf(py::ssize_t(i)) = 1.0 / (1.0 + std::exp(-logits.data()[i]));
    return out;
  }

  py::array_t<double> decode_anchors(const py::array_t<double>& latent) const {
    tad::NoGradGuard guard;
    tad::Tensor pos = model_.decode_position(array_to_tensor(latent));
    std::vector<mesh::Vec3> pts(pos.shape()[0]);
    for (std::size_t i = 0; i < pts.size(); ++i)
      pts[i] = {pos.data()[i * 3], pos.data()[i * 3 + 1],
                pos.data()[i * 3 + 2]};
    return from_points(pts);
  }

  std::vector<int> segment(const py::array_t<double>& latent) const {
    tad::NoGradGuard guard;
    latentseg::SegmentationResult seg =
        latentseg::segment(model_, array_to_tensor(latent), config_.seg);
    std::vector<int> assignment(config_.vae.config.num_latents, -1);
    for (const auto& g : seg.groups)
      for (std::size_t idx : g.indices) assignment[idx] = g.part_id;
    return assignment;
  }

 private:
  RunConfig config_;
  vae::GeomSegVae model_;
};

py::dict report_to_dict(const pipeline::StageReport& report) {
  py::dict out;
  py::dict metrics;
  for (const auto& [key, value] : report.metrics)
    metrics[py::str(key)] = value;
  out["metrics"] = metrics;
  out["outputs"] = py::cast(report.outputs);
  return out;
}

RunConfig config_or_default(const std::string& path) {
  return path.empty() ? RunConfig{} : load_run_config(path);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "unified part-level 3D generation: core operations";

  // --- procedural shapes ---------------------------------------------------
  py::class_<procgen::ShapeSpec>(m, "ShapeSpec")
      .def_property_readonly("num_parts", &procgen::ShapeSpec::num_parts);

  m.def(
      "generate_shape",
      [](std::uint64_t seed, int min_parts, int max_parts) {
        procgen::GenConfig cfg;
        cfg.min_parts = min_parts;
        cfg.max_parts = max_parts;
        return procgen::generate_shape(seed, cfg);
      },
      py::arg("seed"), py::arg("min_parts") = 2, py::arg("max_parts") = 5);

  m.def("sdf", [](const procgen::ShapeSpec& spec,
                  const py::array_t<double>& points) {
    auto pts = to_points(points);
    py::array_t<double> out(py::ssize_t(pts.size()));
    auto buf = out.mutable_unchecked<1>();
    for (std::size_t i = 0; i < pts.size(); ++i)
      buf(py::ssize_t(i)) = procgen::union_sdf(spec, pts[i]);
    return out;
  });

  m.def("occupancy", [](const procgen::ShapeSpec& spec,
                        const py::array_t<double>& points) {
    auto pts = to_points(points);
    py::array_t<bool> out(py::ssize_t(pts.size()));
    auto buf = out.mutable_unchecked<1>();
    for (std::size_t i = 0; i < pts.size(); ++i)
      buf(py::ssize_t(i)) = procgen::occupancy(spec, pts[i]);
    return out;
  });

  m.def(
      "sample_surface",
      [](const procgen::ShapeSpec& spec, std::size_t count,
         std::uint64_t seed) {
        procgen::SurfaceSamples s = procgen::sample_surface(spec, count, seed);
        return py::make_tuple(from_points(s.positions), from_points(s.normals),
                              py::cast(s.labels));
      },
      py::arg("spec"), py::arg("count"), py::arg("seed") = 0);

  m.def(
      "render_condition",
      [](const procgen::ShapeSpec& spec, int resolution) {
        procgen::ConditionImage img =
            procgen::render_condition(spec, resolution);
        py::array_t<double> sil({img.height, img.width});
        py::array_t<double> depth({img.height, img.width});
        auto s = sil.mutable_unchecked<2>();
        auto d = depth.mutable_unchecked<2>();
        for (int y = 0; y < img.height; ++y)
          for (int x = 0; x < img.width; ++x) {
            s(y, x) = img.silhouette[std::size_t(y) * img.width + x];
            d(y, x) = img.depth[std::size_t(y) * img.width + x];
          }
        return py::make_tuple(sil, depth);
      },
      py::arg("spec"), py::arg("resolution") = 64);

  m.def(
      "extract_mesh",
      [](const procgen::ShapeSpec& spec, int resolution) {
        return mesh_to_dict(procgen::extract_mesh(spec, resolution));
      },
      py::arg("spec"), py::arg("resolution") = 64);

  // --- geometry kernel -----------------------------------------------------
  m.def(
      "marching_cubes",
      [](const py::array_t<double>& values, int resolution, double isolevel) {
        auto buf = values.unchecked<1>();
        std::vector<double> grid(std::size_t(buf.shape(0)));
        for (py::ssize_t i = 0; i < buf.shape(0); ++i)
          grid[std::size_t(i)] = buf(i);
        mesh::McResult res =
            mesh::marching_cubes_grid(grid, resolution, isolevel);
        py::dict out = mesh_to_dict(res.mesh);
        out["no_crossing"] = res.no_crossing;
        return out;
      },
      py::arg("values"), py::arg("resolution"), py::arg("isolevel") = 0.5,
      "Isosurface of a flat (res+1)^3 grid (z-fastest) over [-1,1]^3");

  m.def(
      "farthest_point_sample",
      [](const py::array_t<double>& points, std::size_t k) {
        return mesh::farthest_point_sample(to_points(points), k);
      },
      py::arg("points"), py::arg("k"));

  m.def(
      "winding_numbers",
      [](const py::array_t<double>& vertices, const py::array_t<int>& faces,
         const py::array_t<double>& points) {
        return mesh::winding_numbers(to_mesh(vertices, faces),
                                     to_points(points));
      },
      py::arg("vertices"), py::arg("faces"), py::arg("points"));

  m.def(
      "sample_mesh_surface",
      [](const py::array_t<double>& vertices, const py::array_t<int>& faces,
         std::size_t count, std::uint64_t seed) {
        return from_points(mesh::sample_mesh_surface(to_mesh(vertices, faces),
                                                     count, seed));
      },
      py::arg("vertices"), py::arg("faces"), py::arg("count"),
      py::arg("seed") = 0);

  // --- evaluation ----------------------------------------------------------
  m.def(
      "chamfer",
      [](const py::array_t<double>& a, const py::array_t<double>& b,
         bool squared) {
        return eval::chamfer(to_points(a), to_points(b), squared);
      },
      py::arg("a"), py::arg("b"), py::arg("squared") = false);

  m.def(
      "fscore",
      [](const py::array_t<double>& a, const py::array_t<double>& b,
         double tau) { return eval::fscore(to_points(a), to_points(b), tau); },
      py::arg("a"), py::arg("b"), py::arg("tau"));

  m.def("miou", &eval::miou, py::arg("pred_labels"), py::arg("gt_labels"));

  m.def(
      "pose_search_eval",
      [](const py::array_t<double>& pred_v, const py::array_t<int>& pred_f,
         const py::array_t<double>& gt_v, const py::array_t<int>& gt_f,
         std::size_t samples, std::uint64_t seed) {
        eval::EvalConfig cfg;
        cfg.samples_per_mesh = samples;
        cfg.sample_seed = seed;
        eval::MetricReport rep = eval::pose_search_eval(
            to_mesh(pred_v, pred_f), to_mesh(gt_v, gt_f), cfg);
        py::dict out;
        out["cd"] = rep.cd;
        out["f_at_005"] = rep.f_at_005;
        out["f_at_010"] = rep.f_at_010;
        out["best_rotation"] = rep.best_rotation;
        return out;
      },
      py::arg("pred_vertices"), py::arg("pred_faces"), py::arg("gt_vertices"),
      py::arg("gt_faces"), py::arg("samples") = 10000, py::arg("seed") = 0);

  // --- models --------------------------------------------------------------
  py::class_<PyVae>(m, "GeomSegVae")
      .def(py::init<const std::string&, const std::string&,
                    const std::string&>(),
           py::arg("config_path"), py::arg("vae_checkpoint"),
           py::arg("pos_checkpoint") = std::string())
      .def("encode", &PyVae::encode, py::arg("positions"), py::arg("normals"),
           py::arg("labels"), py::arg("num_parts"), py::arg("seed") = 0)
      .def("decode_occupancy", &PyVae::decode_occupancy, py::arg("latent"),
           py::arg("queries"))
      .def("decode_anchors", &PyVae::decode_anchors, py::arg("latent"))
      .def("segment", &PyVae::segment, py::arg("latent"));

  // --- pipeline stages -----------------------------------------------------
  auto pl = m.def_submodule("pipeline", "pipeline stages over artifact dirs");
  pl.def("dataset", [](const std::string& config, const std::string& out) {
    return report_to_dict(pipeline::run_dataset(config_or_default(config), out));
  });
  pl.def("train_vae", [](const std::string& config, const std::string& ds,
                         const std::string& out) {
    return report_to_dict(
        pipeline::run_train_vae(config_or_default(config), ds, out));
  });
  pl.def("train_pos", [](const std::string& config, const std::string& ds,
                         const std::string& vae_ckpt, const std::string& out) {
    return report_to_dict(
        pipeline::run_train_pos(config_or_default(config), ds, vae_ckpt, out));
  });
  pl.def("train_whole", [](const std::string& config, const std::string& ds,
                           const std::string& vae_ckpt,
                           const std::string& out) {
    return report_to_dict(pipeline::run_train_whole(config_or_default(config),
                                                    ds, vae_ckpt, out));
  });
  pl.def("train_part", [](const std::string& config, const std::string& ds,
                          const std::string& vae_ckpt, const std::string& out) {
    return report_to_dict(pipeline::run_train_part(config_or_default(config),
                                                   ds, vae_ckpt, out));
  });
  pl.def("generate", [](const std::string& config, const std::string& ds,
                        std::size_t index, const std::string& vae_ckpt,
                        const std::string& whole_ckpt,
                        const std::string& part_ckpt,
                        const std::string& pos_ckpt, const std::string& out) {
    return report_to_dict(
        pipeline::run_generate(config_or_default(config), ds, index, vae_ckpt,
                               whole_ckpt, part_ckpt, pos_ckpt, out));
  });
  pl.def("evaluate", [](const std::string& config, const std::string& ds,
                        const std::string& pred_root, const std::string& out) {
    return report_to_dict(
        pipeline::run_eval(config_or_default(config), ds, pred_root, out));
  });
  pl.def("export_record", [](const std::string& config, const std::string& ds,
                             std::size_t index, const std::string& out) {
    return report_to_dict(
        pipeline::run_export(config_or_default(config), ds, index, out));
  });
}
