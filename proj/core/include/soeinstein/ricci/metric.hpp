#pragma once

#include <array>
#include <ostream>

#include "soeinstein/lie/group_spec.hpp"

namespace soe::ricci {

using lie::Module;

// x1 (-B)|m1 + x2 (-B)|m2 + x3 (-B)|m3 + x12 (-B)|m12 + x13 (-B)|m13 + x23 (-B)|m23
template <class T>
struct MetricParams {
  T x1{}, x2{}, x3{}, x12{}, x13{}, x23{};

  T& operator[](Module m) { return *ptr(this, m); }
  const T& operator[](Module m) const { return *ptr(this, m); }

  std::array<T, 6> as_array() const { return {x1, x2, x3, x12, x13, x23}; }
  static MetricParams from_array(const std::array<T, 6>& a) { return {a[0], a[1], a[2], a[3], a[4], a[5]}; }

  friend bool operator==(const MetricParams&, const MetricParams&) = default;

 private:
  template <class Self>
  static auto ptr(Self* self, Module m) {
    switch (m) {
      case Module::m1: return &self->x1;
      case Module::m2: return &self->x2;
      case Module::m3: return &self->x3;
      case Module::m12: return &self->x12;
      case Module::m13: return &self->x13;
      case Module::m23: break;
    }
    return &self->x23;
  }
};

template <class T>
struct RicciComponents {
  T r1{}, r2{}, r3{}, r12{}, r13{}, r23{};

  T& operator[](Module m) { return *ptr(this, m); }
  const T& operator[](Module m) const { return *ptr(this, m); }

  std::array<T, 6> as_array() const { return {r1, r2, r3, r12, r13, r23}; }

  friend bool operator==(const RicciComponents&, const RicciComponents&) = default;

 private:
  template <class Self>
  static auto ptr(Self* self, Module m) {
    switch (m) {
      case Module::m1: return &self->r1;
      case Module::m2: return &self->r2;
      case Module::m3: return &self->r3;
      case Module::m12: return &self->r12;
      case Module::m13: return &self->r13;
      case Module::m23: break;
    }
    return &self->r23;
  }
};

template <class T>
std::ostream& operator<<(std::ostream& os, const MetricParams<T>& x) {
  return os << "(" << x.x1 << ", " << x.x2 << ", " << x.x3 << ", " << x.x12 << ", " << x.x13 << ", " << x.x23 << ")";
}

template <class T>
std::ostream& operator<<(std::ostream& os, const RicciComponents<T>& r) {
  return os << "(" << r.r1 << ", " << r.r2 << ", " << r.r3 << ", " << r.r12 << ", " << r.r13 << ", " << r.r23 << ")";
}

}  // namespace soe::ricci
