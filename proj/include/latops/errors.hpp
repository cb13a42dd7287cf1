/*
   Copyright 2026 The latops Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LATOPS_ERRORS_HPP
#define LATOPS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace latops {

/// Raised when a quantity that must be nonzero for regularity vanishes
/// (C_n = 0, <u, P_n^2> = 0, d_n = 0, a vanishing restriction factor, ...).
/// index() is the offending sequence index.
class regularity_error : public std::domain_error {
   public:
    regularity_error(const std::string& what, long index)
        : std::domain_error(what), index_(index) {}

    long index() const noexcept { return index_; }

   private:
    long index_;
};

/// A requested degree exceeds what an operator table or a truncated
/// moment vector can supply.
class degree_error : public std::out_of_range {
   public:
    using std::out_of_range::out_of_range;
};

}  // namespace latops

#endif
