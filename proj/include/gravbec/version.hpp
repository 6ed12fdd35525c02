// SPDX-License-Identifier: Apache-2.0
#ifndef GRAVBEC_VERSION_HPP
#define GRAVBEC_VERSION_HPP

namespace gravbec {
inline constexpr const char* version = "0.1.0";
}

#endif  // GRAVBEC_VERSION_HPP
