// SPDX-License-Identifier: Apache-2.0

#ifndef MDSLIFT_MDSLIFT_HPP
#define MDSLIFT_MDSLIFT_HPP

#include "mdslift/codes.hpp"
#include "mdslift/erasure.hpp"
#include "mdslift/error.hpp"
#include "mdslift/gf.hpp"
#include "mdslift/lifting.hpp"
#include "mdslift/linalg.hpp"
#include "mdslift/splitmix.hpp"
#include "mdslift/text_format.hpp"

#endif // MDSLIFT_MDSLIFT_HPP
