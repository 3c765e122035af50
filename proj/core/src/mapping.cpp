/*
 * Copyright (c) the qroute authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "qroute/mapping.hpp"

#include <string>

#include "qroute/errors.hpp"

namespace qroute {

Mapping::Mapping(std::vector<int> forward, int num_physical) : fwd_(std::move(forward)) {
    if (static_cast<int>(fwd_.size()) > num_physical)
        throw CapacityError("mapping needs " + std::to_string(fwd_.size()) +
                            " physical qubits, device has " + std::to_string(num_physical));
    rev_.assign(num_physical, -1);
    for (int l = 0; l < static_cast<int>(fwd_.size()); ++l) {
        int p = fwd_[l];
        if (p < 0 || p >= num_physical)
            throw InternalError("mapping sends logical " + std::to_string(l) +
                                " to out-of-range physical " + std::to_string(p));
        if (rev_[p] != -1)
            throw InternalError("mapping is not injective: physical " + std::to_string(p) +
                                " occupied twice");
        rev_[p] = l;
    }
}

Mapping Mapping::identity(int num_logical, int num_physical) {
    std::vector<int> fwd(num_logical);
    for (int i = 0; i < num_logical; ++i)
        fwd[i] = i;
    return Mapping(std::move(fwd), num_physical);
}

void Mapping::swap_physical(int p_a, int p_b) {
    int la = rev_[p_a];
    int lb = rev_[p_b];
    rev_[p_a] = lb;
    rev_[p_b] = la;
    if (la != -1)
        fwd_[la] = p_b;
    if (lb != -1)
        fwd_[lb] = p_a;
}

} // namespace qroute
