#pragma once

#include "group.hpp"
#include "catalog.hpp"
#include "groupoid.hpp"
#include "comma.hpp"
#include "span.hpp"
#include "spanhat.hpp"
#include "rings.hpp"
#include "poly.hpp"
#include "algebra.hpp"
#include "mackey.hpp"
#include "io.hpp"
#include "suites.hpp"
