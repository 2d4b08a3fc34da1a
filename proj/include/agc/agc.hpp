#pragma once

#include "agcode.hpp"
#include "bounds.hpp"
#include "code.hpp"
#include "elliptic.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "modular.hpp"
#include "numeric.hpp"
#include "rational.hpp"
