// Copyright 2026 The hdshapes Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <string>
#include <utility>

#include "hdshapes/error.hpp"
#include "hdshapes/shapes.hpp"

namespace hdshapes {

const std::vector<std::string>& all_param_names() {
  static const std::vector<std::string> names = {
      "n",   "p",  "k",  "h",     "ratio", "s",     "r",   "w",
      "steps", "spins", "hc", "non_fac", "l", "l_vec", "rt", "rb",
      "n_vec", "r_vec", "spe", "range", "allow_share"};
  return names;
}

std::vector<std::string> ShapeParams::provided() const {
  std::vector<std::string> set;
  auto note = [&](bool present, const char* name) {
    if (present) set.emplace_back(name);
  };
  note(n.has_value(), "n");
  note(p.has_value(), "p");
  note(k.has_value(), "k");
  note(h.has_value(), "h");
  note(ratio.has_value(), "ratio");
  note(s.has_value(), "s");
  note(r.has_value(), "r");
  note(w.has_value(), "w");
  note(steps.has_value(), "steps");
  note(spins.has_value(), "spins");
  note(hc.has_value(), "hc");
  note(non_fac.has_value(), "non_fac");
  note(l.has_value(), "l");
  note(l_vec.has_value(), "l_vec");
  note(rt.has_value(), "rt");
  note(rb.has_value(), "rb");
  note(n_vec.has_value(), "n_vec");
  note(r_vec.has_value(), "r_vec");
  note(spe.has_value(), "spe");
  note(range.has_value(), "range");
  note(allow_share.has_value(), "allow_share");
  return set;
}

namespace {

constexpr std::size_t kDefaultN = 500;

std::size_t count(const ShapeParams& q) { return q.n.value_or(kDefaultN); }

// Registers a kind whose output has a fixed column count.
ShapeInfo fixed(std::string name, std::string description,
                std::vector<std::string> params, std::size_t dim,
                std::function<Dataset(const ShapeParams&, RandomStream&)> gen,
                bool exact_n = true) {
  return {std::move(name), std::move(description), std::move(params), dim,
          false, dim, exact_n, std::move(gen)};
}

// Registers a kind that takes p; `default_p` is also reported as the
// intrinsic dimension.
ShapeInfo with_p(std::string name, std::string description,
                 std::vector<std::string> params, std::size_t default_p,
                 std::size_t min_p,
                 std::function<Dataset(const ShapeParams&, RandomStream&)> gen,
                 bool exact_n = true) {
  return {std::move(name), std::move(description), std::move(params),
          default_p, true, min_p, exact_n, std::move(gen)};
}

Branches branches(BranchKind kind, const ShapeParams& q, RandomStream& s,
                  std::size_t default_p) {
  return gen_branches(kind, count(q), q.k.value_or(4), q.p.value_or(default_p),
                      q.allow_share.value_or(false), s);
}

PyramidParams pyramid(const ShapeParams& q) {
  PyramidParams params;
  params.n = count(q);
  params.p = q.p.value_or(params.p);
  params.h = q.h.value_or(params.h);
  params.l_vec = q.l_vec.value_or(params.l_vec);
  params.l = q.l.value_or(params.l);
  params.rt = q.rt.value_or(params.rt);
  params.rb = q.rb.value_or(params.rb);
  return params;
}

ClusteredSpheresParams clustered(const ShapeParams& q) {
  ClusteredSpheresParams params;
  params.k = q.k.value_or(params.k);
  params.p = q.p.value_or(params.p);
  if (q.r_vec) {
    params.r_big = q.r_vec->first;
    params.r_small = q.r_vec->second;
  }
  params.spe = q.spe.value_or(params.spe);
  require(params.k >= 1, ErrorCode::kParameter,
          "clusteredspheres needs k >= 1");
  if (q.n_vec) {
    require(q.n_vec->size() == 2, ErrorCode::kParameter,
            "n_vec must hold two sizes (big, small)");
    params.n_big = (*q.n_vec)[0];
    params.n_small = (*q.n_vec)[1];
    if (q.n) {
      require(*q.n == params.n_big + params.k * params.n_small,
              ErrorCode::kParameter,
              "n does not equal n_vec[0] + k * n_vec[1]");
    }
  } else if (q.n) {
    // Half of the points go to the small spheres, the rest to the big one.
    params.n_small = std::max<std::size_t>(1, *q.n / (2 * params.k));
    require(*q.n > params.k * params.n_small, ErrorCode::kParameter,
            "clusteredspheres needs n > k");
    params.n_big = *q.n - params.k * params.n_small;
  }
  return params;
}

std::vector<ShapeInfo> build_registry() {
  std::vector<ShapeInfo> kinds;
  kinds.push_back(fixed("expbranches", "Exponential shaped branches.",
                        {"n", "k"}, 2, [](const ShapeParams& q, RandomStream& s) {
                          return branches(BranchKind::kExp, q, s, 2).data;
                        }));
  kinds.push_back(fixed("linearbranches", "Linear shaped branches.", {"n", "k"},
                        2, [](const ShapeParams& q, RandomStream& s) {
                          return branches(BranchKind::kLinear, q, s, 2).data;
                        }));
  kinds.push_back(fixed("curvybranches", "Curvy shaped branches.", {"n", "k"},
                        2, [](const ShapeParams& q, RandomStream& s) {
                          return branches(BranchKind::kCurvy, q, s, 2).data;
                        }));
  kinds.push_back(with_p(
      "orglinearbranches", "Linear shaped branches originated in one point.",
      {"n", "p", "k", "allow_share"}, 4, 2,
      [](const ShapeParams& q, RandomStream& s) {
        return branches(BranchKind::kOrgLinear, q, s, 4).data;
      }));
  kinds.push_back(with_p(
      "orgcurvybranches", "Curvy shaped branches originated in one point.",
      {"n", "p", "k", "allow_share"}, 4, 2,
      [](const ShapeParams& q, RandomStream& s) {
        return branches(BranchKind::kOrgCurvy, q, s, 4).data;
      }));
  kinds.push_back(with_p("cone", "Cone-shaped structure.",
                         {"n", "p", "h", "ratio"}, 4, 3,
                         [](const ShapeParams& q, RandomStream& s) {
                           return gen_cone(count(q), q.p.value_or(4),
                                           q.h.value_or(5.0),
                                           q.ratio.value_or(0.5), s);
                         }));
  kinds.push_back(with_p(
      "gridcube", "Cube with specified grid points along each axes.",
      {"n", "p"}, 3, 1,
      [](const ShapeParams& q, RandomStream& s) {
        return gen_cube(CubeKind::kGrid, count(q), q.p.value_or(3), s);
      },
      false));
  kinds.push_back(with_p("unifcube", "Cube with uniform points.", {"n", "p"},
                         3, 1, [](const ShapeParams& q, RandomStream& s) {
                           return gen_cube(CubeKind::kUnif, count(q),
                                           q.p.value_or(3), s);
                         }));
  kinds.push_back(with_p("gaussian", "Multivariate Gaussian cloud.",
                         {"n", "p", "s"}, 4, 1,
                         [](const ShapeParams& q, RandomStream& s) {
                           return gen_gaussian(count(q), q.p.value_or(4),
                                               q.s.value_or(Matrix()), s);
                         }));
  kinds.push_back(with_p("longlinear", "Long linear structure.", {"n", "p"}, 4,
                         1, [](const ShapeParams& q, RandomStream& s) {
                           return gen_longlinear(count(q), q.p.value_or(4), s)
                               .data;
                         }));
  kinds.push_back(fixed("mobius", "Mobius strip in 3-D.", {"n"}, 3,
                        [](const ShapeParams& q, RandomStream& s) {
                          return gen_mobius(count(q), s);
                        }));
  kinds.push_back(fixed("quadratic", "Quadratic pattern in 2-D.",
                        {"n", "range"}, 2,
                        [](const ShapeParams& q, RandomStream& s) {
                          return gen_polynomial(PolynomialKind::kQuadratic,
                                                count(q),
                                                q.range.value_or(Interval{-1, 1}),
                                                s);
                        }));
  kinds.push_back(fixed("cubic", "Cubic pattern in 2-D.", {"n", "range"}, 2,
                        [](const ShapeParams& q, RandomStream& s) {
                          return gen_polynomial(PolynomialKind::kCubic, count(q),
                                                q.range.value_or(Interval{-1, 1}),
                                                s);
                        }));
  kinds.push_back(with_p(
      "pyrrect", "Rectangular-base pyramid, with a sharp or blunted apex.",
      {"n", "p", "h", "l_vec", "rt"}, 4, 4,
      [](const ShapeParams& q, RandomStream& s) {
        return gen_pyramid(PyramidKind::kRect, pyramid(q), s);
      }));
  kinds.push_back(with_p(
      "pyrtri", "Triangular-base pyramid, with a sharp or blunted apex.",
      {"n", "p", "h", "l", "rt"}, 4, 4,
      [](const ShapeParams& q, RandomStream& s) {
        return gen_pyramid(PyramidKind::kTri, pyramid(q), s);
      }));
  kinds.push_back(with_p(
      "pyrstar", "Star-shaped base pyramid, with a sharp or blunted apex.",
      {"n", "p", "h", "rb"}, 4, 3,
      [](const ShapeParams& q, RandomStream& s) {
        return gen_pyramid(PyramidKind::kStar, pyramid(q), s);
      }));
  kinds.push_back(with_p(
      "pyrfrac", "Pyramid with triangular pyramid-shaped holes.", {"n", "p"},
      3, 2, [](const ShapeParams& q, RandomStream& s) {
        auto params = pyramid(q);
        params.p = q.p.value_or(3);
        return gen_pyramid(PyramidKind::kFrac, params, s);
      }));
  kinds.push_back(fixed("scurve", "S-curve in 3-D.", {"n"}, 3,
                        [](const ShapeParams& q, RandomStream& s) {
                          return gen_scurve(count(q), s);
                        }));
  kinds.push_back(with_p("circle", "Circle.", {"n", "p"}, 2, 2,
                         [](const ShapeParams& q, RandomStream& s) {
                           return gen_circle(count(q), q.p.value_or(2), s);
                         }));
  kinds.push_back(with_p("curvycycle", "Curvy cell cycle.", {"n", "p"}, 3, 3,
                         [](const ShapeParams& q, RandomStream& s) {
                           return gen_curvycycle(count(q), q.p.value_or(3), s);
                         }));
  kinds.push_back(fixed("unifsphere", "Points on the surface of a sphere.",
                        {"n", "r"}, 3,
                        [](const ShapeParams& q, RandomStream& s) {
                          return gen_unifsphere(count(q), q.r.value_or(1.0), s);
                        }));
  kinds.push_back(with_p("hollowsphere", "Hollow sphere.", {"n", "p"}, 3, 2,
                         [](const ShapeParams& q, RandomStream& s) {
                           return gen_hollowsphere(count(q), q.p.value_or(3), s);
                         }));
  kinds.push_back(with_p(
      "gridedsphere", "Grided sphere.", {"n", "p"}, 3, 2,
      [](const ShapeParams& q, RandomStream&) {
        return gen_gridedsphere(count(q), q.p.value_or(3));
      },
      false));
  kinds.push_back(with_p(
      "clusteredspheres", "Multiple small spheres within a big sphere.",
      {"n", "p", "k", "n_vec", "r_vec", "spe"}, 3, 2,
      [](const ShapeParams& q, RandomStream& s) {
        return gen_clusteredspheres(clustered(q), s);
      }));
  kinds.push_back(with_p("hemisphere", "Hemisphere.", {"n", "p"}, 4, 4,
                         [](const ShapeParams& q, RandomStream& s) {
                           return gen_hemisphere(count(q), q.p.value_or(4), s);
                         }));
  kinds.push_back(fixed("swissroll", "Swissroll structure.", {"n", "w"}, 3,
                        [](const ShapeParams& q, RandomStream& s) {
                          return gen_swissroll(count(q),
                                               q.w.value_or(Interval{-1, 1}), s);
                        }));
  kinds.push_back(fixed("trefoil4d", "Trefoil in 4-D.", {"n", "steps"}, 4,
                        [](const ShapeParams& q, RandomStream& s) {
                          return gen_trefoil(TrefoilKind::k4d, count(q),
                                             q.steps.value_or(5), s);
                        }));
  kinds.push_back(fixed("trefoil3d", "Trefoil in 3-D.", {"n", "steps"}, 3,
                        [](const ShapeParams& q, RandomStream& s) {
                          return gen_trefoil(TrefoilKind::k3d, count(q),
                                             q.steps.value_or(5), s);
                        }));
  kinds.push_back(fixed("crescent", "Crescent pattern.", {"n"}, 2,
                        [](const ShapeParams& q, RandomStream&) {
                          return gen_crescent(count(q));
                        }));
  kinds.push_back(with_p("curvycylinder", "Curvy cylinder.", {"n", "p", "h"},
                         4, 4, [](const ShapeParams& q, RandomStream& s) {
                           return gen_curvycylinder(count(q), q.p.value_or(4),
                                                    q.h.value_or(5.0), s);
                         }));
  kinds.push_back(with_p("sphericalspiral", "Spherical spiral.",
                         {"n", "p", "spins"}, 4, 4,
                         [](const ShapeParams& q, RandomStream& s) {
                           return gen_sphericalspiral(count(q), q.p.value_or(4),
                                                      q.spins.value_or(2), s);
                         }));
  kinds.push_back(with_p("helicalspiral", "Helical spiral.", {"n", "p"}, 4, 4,
                         [](const ShapeParams& q, RandomStream& s) {
                           return gen_helicalspiral(count(q), q.p.value_or(4),
                                                    s);
                         }));
  kinds.push_back(with_p("conicspiral", "Conic spiral.", {"n", "p", "spins"},
                         4, 4, [](const ShapeParams& q, RandomStream& s) {
                           return gen_conicspiral(count(q), q.p.value_or(4),
                                                  q.spins.value_or(1), s);
                         }));
  kinds.push_back(with_p("nonlinear", "Nonlinear hyperbola.",
                         {"n", "p", "hc", "non_fac"}, 4, 4,
                         [](const ShapeParams& q, RandomStream& s) {
                           return gen_nonlinear(count(q), q.p.value_or(4),
                                                q.hc.value_or(1.0),
                                                q.non_fac.value_or(0.5), s);
                         }));
  return kinds;
}

}  // namespace

const std::vector<ShapeInfo>& shape_registry() {
  static const std::vector<ShapeInfo> registry = build_registry();
  return registry;
}

bool has_shape(std::string_view name) {
  const auto& kinds = shape_registry();
  return std::any_of(kinds.begin(), kinds.end(),
                     [&](const ShapeInfo& info) { return info.name == name; });
}

const ShapeInfo& find_shape(std::string_view name) {
  for (const auto& info : shape_registry()) {
    if (info.name == name) return info;
  }
  fail(ErrorCode::kRegistry, "unknown shape kind '" + std::string(name) + "'");
}

void validate_params(const ShapeInfo& info, const ShapeParams& params) {
  for (const auto& name : params.provided()) {
    const bool accepted = std::find(info.params.begin(), info.params.end(),
                                    name) != info.params.end();
    require(accepted, ErrorCode::kRejectedParameter,
            "parameter '" + name + "' is not valid for " + info.name);
  }
  if (params.n) {
    require(*params.n >= 1, ErrorCode::kParameter, "n must be >= 1");
  }
  if (info.takes_p && params.p) {
    require(*params.p >= info.min_p, ErrorCode::kDimension,
            info.name + " needs p >= " + std::to_string(info.min_p));
  }
}

std::size_t output_dim(const ShapeInfo& info, const ShapeParams& params) {
  return info.takes_p ? params.p.value_or(info.intrinsic_dim)
                      : info.intrinsic_dim;
}

Dataset generate_shape(std::string_view name, const ShapeParams& params,
                       RandomStream& stream) {
  const auto& info = find_shape(name);
  validate_params(info, params);
  return info.generate(params, stream);
}

}  // namespace hdshapes
